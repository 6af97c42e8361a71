#include "grover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace grover {

namespace {

constexpr double kParallelTol = 1e-14;

} // namespace

Mat2 Mat2::rotation(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c, -s, s, c};
}

double Mat2::max_abs_diff(const Mat2& o) const {
    return std::max({std::abs(a11 - o.a11), std::abs(a12 - o.a12),
                     std::abs(a21 - o.a21), std::abs(a22 - o.a22)});
}

Mat2 reflection_matrix(double theta) {
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    return {c, s, s, -c};
}

Mat2 rotation_from_reflections(double theta1, double theta2) {
    // First the mirror at theta1, then the mirror at theta2.
    return reflection_matrix(theta2) * reflection_matrix(theta1);
}

PlaneBasis build_plane_basis(const StateVector& u0, const StateVector& x0_state) {
    const Amplitude overlap = inner_product(u0, x0_state); // <u0|x0>
    const double a = std::abs(overlap);
    if (a >= 1.0 - kParallelTol) {
        std::ostringstream msg;
        msg << "plane is degenerate: |<u0|x0>| = " << a;
        throw std::invalid_argument(msg.str());
    }

    // e^{i xi} x0 = a e1 + b e2 with a real: xi = -arg(<u0|x0>).
    double xi = (a == 0.0) ? 0.0 : -std::arg(overlap);
    if (xi <= -std::numbers::pi) xi = std::numbers::pi; // normalize to (-pi, pi]
    const Amplitude phase{std::cos(xi), std::sin(xi)};

    const auto& u = u0.amplitudes();
    const auto& x = x0_state.amplitudes();
    std::vector<Amplitude> raw(u.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = phase * x[i] - a * u[i];
    }
    std::vector<double> sq(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) sq[i] = std::norm(raw[i]);
    const double b = std::sqrt(pairwise_sum(sq));
    for (auto& v : raw) v /= b;

    PlaneBasis basis{u0, StateVector(u0.n_qubits(), std::move(raw)), xi, a, b};
    return basis;
}

RotationModel RotationModel::from_overlap(double overlap_magnitude) {
    if (overlap_magnitude < 0.0 || overlap_magnitude > 1.0) {
        throw std::invalid_argument("overlap magnitude must lie in [0, 1]");
    }
    const double alpha = std::asin(overlap_magnitude);
    return {alpha, std::numbers::pi / 2.0 - alpha};
}

PlaneProjection project_to_plane(const StateVector& state, const PlaneBasis& basis) {
    const Amplitude z1 = inner_product(basis.e1, state);
    const Amplitude z2 = inner_product(basis.e2, state);

    // Common phase gamma minimizing the imaginary remainder; arg() of z1^2 +
    // z2^2 halves into (-pi/2, pi/2], so purely real coordinate pairs come
    // back untouched, including their signs.
    const Amplitude zsq = z1 * z1 + z2 * z2;
    const double gamma = (std::abs(zsq) == 0.0) ? 0.0 : 0.5 * std::arg(zsq);
    const Amplitude w{std::cos(-gamma), std::sin(-gamma)};
    const Amplitude r1 = z1 * w;
    const Amplitude r2 = z2 * w;

    // Out-of-plane remainder: state - z1 e1 - z2 e2.
    const auto& s = state.amplitudes();
    const auto& e1 = basis.e1.amplitudes();
    const auto& e2 = basis.e2.amplitudes();
    std::vector<double> sq(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        sq[i] = std::norm(s[i] - z1 * e1[i] - z2 * e2[i]);
    }
    const double residual = std::sqrt(pairwise_sum(sq));

    PlaneProjection proj;
    proj.coords = {r1.real(), r2.real()};
    proj.residual = residual;
    proj.phase = gamma;
    proj.imag_residual = std::max(std::abs(r1.imag()), std::abs(r2.imag()));
    return proj;
}

Vec2 model_step(const Vec2& v, const RotationModel& model, IterateVariant variant) {
    const double angle =
        (variant == IterateVariant::Squared) ? 4.0 * model.alpha : 2.0 * model.alpha;
    return Mat2::rotation(angle) * v;
}

TraceComparison compare_trace(const IterationTrace& trace, const RotationModel& model) {
    TraceComparison cmp;
    const double sa = std::sin(model.alpha);
    const double ca = std::cos(model.alpha);
    Vec2 v{1.0, 0.0}; // the start state is e1
    for (const IterationRecord& rec : trace.records) {
        // |<x0|psi>|^2 in model coordinates: x0 sits at (sin a, cos a).
        const double amp = sa * v.c1 + ca * v.c2;
        cmp.max_prob_dev = std::max(cmp.max_prob_dev,
                                    std::abs(rec.success_prob - amp * amp));
        if (!trace.degenerate_plane) {
            cmp.max_coord_dev = std::max({cmp.max_coord_dev, std::abs(rec.c1 - v.c1),
                                          std::abs(rec.c2 - v.c2)});
            cmp.max_residual = std::max(cmp.max_residual, rec.residual);
        }
        v = model_step(v, model, trace.variant);
    }
    return cmp;
}

} // namespace grover
