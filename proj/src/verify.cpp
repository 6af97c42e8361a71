#include "grover/verify.hpp"

#include "grover/geometry.hpp"
#include "grover/rng.hpp"
#include "grover/trace_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace grover::verify {

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int n_qubits, std::uint64_t seed) {
    RandomEngine eng = make_engine(seed);
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<Amplitude> amps(dim);
    for (auto& a : amps) a = complex_gaussian(eng);
    std::vector<double> sq(dim);
    for (std::size_t i = 0; i < dim; ++i) sq[i] = std::norm(amps[i]);
    const double r = std::sqrt(pairwise_sum(sq));
    for (auto& a : amps) a /= r;
    return StateVector(n_qubits, std::move(amps));
}

double state_norm(const StateVector& s) {
    std::vector<double> sq(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) sq[i] = std::norm(s.amplitudes()[i]);
    return std::sqrt(pairwise_sum(sq));
}

double max_amp_dev(const StateVector& a, const StateVector& b) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        dev = std::max(dev, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return dev;
}

// Orthonormal pair spanning a random plane.
std::pair<StateVector, StateVector> orthonormal_pair(int n_qubits, std::uint64_t seed) {
    const StateVector psi = random_state(n_qubits, seed);
    RandomEngine eng = make_engine(mix64(seed));
    std::vector<Amplitude> raw(psi.dim());
    for (auto& a : raw) a = complex_gaussian(eng);
    StateVector draft(n_qubits, [&] {
        std::vector<double> sq(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) sq[i] = std::norm(raw[i]);
        const double r = std::sqrt(pairwise_sum(sq));
        std::vector<Amplitude> out = raw;
        for (auto& a : out) a /= r;
        return out;
    }());
    const Amplitude c = inner_product(psi, draft);
    std::vector<Amplitude> perp(psi.dim());
    for (std::size_t i = 0; i < perp.size(); ++i) {
        perp[i] = draft.amplitudes()[i] - c * psi.amplitudes()[i];
    }
    std::vector<double> sq(perp.size());
    for (std::size_t i = 0; i < perp.size(); ++i) sq[i] = std::norm(perp[i]);
    const double r = std::sqrt(pairwise_sum(sq));
    for (auto& a : perp) a /= r;
    return {psi, StateVector(n_qubits, std::move(perp))};
}

// a*x + b*y for |a|^2 + |b|^2 = 1 and <x|y> = 0, hence unit norm.
StateVector combine(Amplitude a, const StateVector& x, Amplitude b, const StateVector& y) {
    std::vector<Amplitude> amps(x.dim());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = a * x.amplitudes()[i] + b * y.amplitudes()[i];
    }
    return StateVector(x.n_qubits(), std::move(amps));
}

std::pair<Amplitude, Amplitude> random_unit_coeffs(RandomEngine& eng) {
    const Amplitude g1 = complex_gaussian(eng);
    const Amplitude g2 = complex_gaussian(eng);
    const double r = std::sqrt(std::norm(g1) + std::norm(g2));
    return {g1 / r, g2 / r};
}

double wrap_pi(double x) {
    x = std::fmod(x, 2.0 * kPi);
    if (x <= -kPi) x += 2.0 * kPi;
    if (x > kPi) x -= 2.0 * kPi;
    return x;
}

std::uint64_t pick_x0(int n_qubits, std::uint64_t salt) {
    return mix64(0xabcdull + salt) & ((std::uint64_t{1} << n_qubits) - 1);
}

CheckResult make_result(std::string name, double deviation, double tolerance,
                        std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.deviation = deviation;
    r.tolerance = tolerance;
    r.passed = deviation <= tolerance;
    r.detail = std::move(detail);
    return r;
}

} // namespace

CheckResult check_reflection_involution() {
    double dev = 0.0;
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 9;
        const StateVector mirror = random_state(n, derive_stream(101, t, 0));
        const StateVector target = random_state(n, derive_stream(101, t, 1));
        const StateVector twice =
            reflect_about_state(mirror, reflect_about_state(mirror, target));
        dev = std::max(dev, max_amp_dev(twice, target));
    }
    return make_result("reflection-involution", dev, kOperatorTol,
                       "200 random (mirror, target) pairs, n in [2,10]");
}

CheckResult check_norm_preservation() {
    double dev = 0.0;
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 8;
        const StateVector mirror = random_state(n, derive_stream(102, t, 0));
        const StateVector target = random_state(n, derive_stream(102, t, 1));
        dev = std::max(dev, std::abs(state_norm(reflect_about_state(mirror, target)) - 1.0));

        auto [b1, b2] = orthonormal_pair(n, derive_stream(102, t, 2));
        const std::array<StateVector, 2> basis{b1, b2};
        dev = std::max(dev, std::abs(state_norm(reflect_about_subspace(basis, target)) - 1.0));

        Oracle oracle(n, pick_x0(n, t));
        dev = std::max(dev, std::abs(state_norm(oracle.apply_ix0(target)) - 1.0));
        const StateVector wide = random_state(n + 1, derive_stream(102, t, 3));
        dev = std::max(dev, std::abs(state_norm(oracle.apply_uf(wide)) - 1.0));
        dev = std::max(dev, std::abs(state_norm(oracle.apply_jx0(wide)) - 1.0));
        dev = std::max(dev, std::abs(state_norm(oracle.uf_via_jx0(wide)) - 1.0));
    }
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 4;
        const DenseUnitary u = random_unitary(derive_stream(103, t), std::size_t{1} << n);
        const StateVector s = random_state(n, derive_stream(103, t, 1));
        dev = std::max(dev, std::abs(state_norm(u.apply(s)) - 1.0));
        dev = std::max(dev, std::abs(state_norm(u.apply_adjoint(s)) - 1.0));
    }
    return make_result("norm-preservation", dev, kNormTol,
                       "reflections, oracle ops, and dense unitaries on random states");
}

CheckResult check_reflection_linearity() {
    double dev = 0.0;
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 7;
        auto [x, y] = orthonormal_pair(n, derive_stream(104, t, 0));
        const StateVector mirror = random_state(n, derive_stream(104, t, 1));
        RandomEngine eng = make_engine(derive_stream(104, t, 2));
        const auto [a, b] = random_unit_coeffs(eng);
        const StateVector lhs = reflect_about_state(mirror, combine(a, x, b, y));
        const StateVector rhs =
            combine(a, reflect_about_state(mirror, x), b, reflect_about_state(mirror, y));
        dev = std::max(dev, max_amp_dev(lhs, rhs));
    }
    return make_result("reflection-linearity", dev, kOperatorTol,
                       "R(a x + b y) vs a R(x) + b R(y), 200 random trials");
}

CheckResult check_plane_preservation() {
    double dev = 0.0;
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 7;
        auto [psi, chi] = orthonormal_pair(n, derive_stream(105, t, 0));
        RandomEngine eng = make_engine(derive_stream(105, t, 1));
        const auto [a, b] = random_unit_coeffs(eng);
        const StateVector in_plane = combine(a, psi, b, chi);
        const auto [m1, m2] = random_unit_coeffs(eng);
        const StateVector mirror = combine(m1, psi, m2, chi);
        const StateVector reflected = reflect_about_state(mirror, in_plane);
        const Amplitude c1 = inner_product(psi, reflected);
        const Amplitude c2 = inner_product(chi, reflected);
        std::vector<double> sq(reflected.dim());
        for (std::size_t i = 0; i < sq.size(); ++i) {
            sq[i] = std::norm(reflected.amplitudes()[i] - c1 * psi.amplitudes()[i] -
                              c2 * chi.amplitudes()[i]);
        }
        dev = std::max(dev, std::sqrt(pairwise_sum(sq)));
    }
    return make_result("plane-preservation", dev, kOperatorTol,
                       "in-plane mirrors keep in-plane states in the plane, 200 trials");
}

CheckResult check_conjugated_reflection() {
    double dev = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + t % 6; // dims 2..64
        const DenseUnitary u = random_unitary(derive_stream(106, t, 0), std::size_t{1} << n);
        const StateVector psi = random_state(n, derive_stream(106, t, 1));
        const StateVector chi = random_state(n, derive_stream(106, t, 2));
        const StateVector lhs = conjugated_reflection(u, psi, chi);
        const StateVector rhs = reflect_about_state(u.apply(psi), chi);
        dev = std::max(dev, max_amp_dev(lhs, rhs));
    }
    return make_result("conjugated-reflection", dev, kOperatorTol,
                       "U I_psi U^-1 vs I_{U psi}, 1000 seeded trials, dim <= 64");
}

CheckResult check_reflection_pair_2d() {
    double dev = 0.0;
    RandomEngine eng = make_engine(107);
    for (int t = 0; t < 1000; ++t) {
        const double theta = (2.0 * uniform01(eng) - 1.0) * kPi;
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // -I_v for v = (c, s): 2 v v^T - I.
        const Mat2 lhs{2.0 * c * c - 1.0, 2.0 * c * s, 2.0 * c * s, 2.0 * s * s - 1.0};
        // I_{v_perp} for v_perp = (-s, c): I - 2 v_perp v_perp^T.
        const Mat2 rhs{1.0 - 2.0 * s * s, 2.0 * c * s, 2.0 * c * s, 1.0 - 2.0 * c * c};
        dev = std::max(dev, lhs.max_abs_diff(rhs));
    }
    return make_result("orthocomplement-reflection-2d", dev, 1e-14,
                       "-I_v vs I_{v_perp} as 2x2 matrices, 1000 random directions");
}

CheckResult check_rotation_composition() {
    double dev = 0.0;
    RandomEngine eng = make_engine(108);
    for (int t = 0; t < 1000; ++t) {
        const double t1 = (2.0 * uniform01(eng) - 1.0) * kPi;
        const double t2 = (2.0 * uniform01(eng) - 1.0) * kPi;
        const Mat2 composed = rotation_from_reflections(t1, t2);
        const Mat2 expected = Mat2::rotation(2.0 * (t2 - t1));
        dev = std::max(dev, composed.max_abs_diff(expected));
    }
    return make_result("rotation-composition", dev, kScalarTol,
                       "two mirrors vs rotation by twice the inter-mirror angle, 1000 pairs");
}

CheckResult check_oracle_involutions() {
    double dev = 0.0;
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 9;
        Oracle oracle(n, pick_x0(n, t));
        const StateVector narrow = random_state(n, derive_stream(109, t, 0));
        dev = std::max(dev, max_amp_dev(oracle.apply_ix0(oracle.apply_ix0(narrow)), narrow));
        const StateVector wide = random_state(n + 1, derive_stream(109, t, 1));
        dev = std::max(dev, max_amp_dev(oracle.apply_uf(oracle.apply_uf(wide)), wide));
        dev = std::max(dev, max_amp_dev(oracle.apply_jx0(oracle.apply_jx0(wide)), wide));
    }
    return make_result("oracle-involutions", dev, kScalarTol,
                       "I_x0, U_f, J_x0 each applied twice, random states, n in [2,10]");
}

CheckResult check_oracle_equivalences() {
    double exhaustive_dev = 0.0;
    for (int n = 1; n <= 6; ++n) {
        Oracle oracle(n, pick_x0(n, 0));
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t x = 0; x < dim; ++x) {
            const StateVector s = StateVector::basis(n, x);
            exhaustive_dev =
                std::max(exhaustive_dev, max_amp_dev(oracle.ix0_via_uf(s), oracle.apply_ix0(s)));
        }
        for (std::uint64_t x = 0; x < 2 * dim; ++x) {
            const StateVector s = StateVector::basis(n + 1, x);
            exhaustive_dev =
                std::max(exhaustive_dev, max_amp_dev(oracle.uf_via_jx0(s), oracle.apply_uf(s)));
        }
    }
    double random_dev = 0.0;
    for (const int n : {8, 16}) {
        Oracle oracle(n, pick_x0(n, 1));
        for (int t = 0; t < 100; ++t) {
            const StateVector narrow = random_state(n, derive_stream(110, n, t));
            random_dev = std::max(
                random_dev, max_amp_dev(oracle.ix0_via_uf(narrow), oracle.apply_ix0(narrow)));
            const StateVector wide = random_state(n + 1, derive_stream(111, n, t));
            random_dev = std::max(
                random_dev, max_amp_dev(oracle.uf_via_jx0(wide), oracle.apply_uf(wide)));
        }
    }
    CheckResult r = make_result("oracle-equivalences", std::max(exhaustive_dev, random_dev),
                                kOperatorTol,
                                "exhaustive basis states n <= 6, 100 random states at n = 8, 16");
    r.passed = exhaustive_dev <= kScalarTol && random_dev <= kOperatorTol;
    return r;
}

CheckResult check_query_accounting() {
    double dev = 0.0;
    {
        Oracle oracle(6, pick_x0(6, 2));
        const IterationTrace trace =
            run(oracle, Preparation::uniform(6), IterateVariant::MinusSign, 10, 1);
        dev = std::max(dev, std::abs(static_cast<double>(trace.total_queries) - 10.0));
        for (const IterationRecord& rec : trace.records) {
            dev = std::max(dev, std::abs(static_cast<double>(rec.queries) -
                                         static_cast<double>(rec.iter)));
        }
    }
    {
        Oracle oracle(6, pick_x0(6, 3));
        const IterationTrace trace =
            run(oracle, Preparation::uniform(6), IterateVariant::Squared, 7, 1);
        dev = std::max(dev, std::abs(static_cast<double>(trace.total_queries) - 14.0));
    }
    {
        Oracle oracle(4, pick_x0(4, 4));
        const StateVector narrow = random_state(4, derive_stream(112, 0));
        const StateVector wide = random_state(5, derive_stream(112, 1));
        oracle.apply_ix0(narrow);
        oracle.ix0_via_uf(narrow);
        oracle.apply_uf(wide);
        oracle.apply_jx0(wide);
        oracle.uf_via_jx0(wide);
        dev = std::max(dev, std::abs(static_cast<double>(oracle.query_count()) - 5.0));
    }
    return make_result("query-accounting", dev, 0.0,
                       "k-step runs cost k (minus) / 2k (squared); each oracle op costs 1");
}

CheckResult check_closed_form_agreement(StepFn step) {
    double dev = 0.0;
    for (int n = 2; n <= 12; ++n) {
        const std::uint64_t x0 = pick_x0(n, 5);
        Oracle oracle(n, x0);
        const StateVector u0 = StateVector::uniform(n);
        const double alpha =
            std::asin(1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << n)));
        StateVector state = u0;
        const int budget = default_budget(n);
        for (int k = 0;; ++k) {
            const double simulated = std::norm(state.amplitude(x0));
            dev = std::max(dev, std::abs(simulated - predicted_success(k, alpha)));
            if (k == budget) break;
            state = step(state, oracle, u0, IterateVariant::MinusSign);
        }
    }
    return make_result("closed-form-agreement", dev, 1e-9,
                       "uniform start, n in [2,12], k <= 3*ceil(sqrt(N))");
}

CheckResult check_plane_confinement() {
    double dev = 0.0;
    const int n = 8;
    const int budget = default_budget(n);
    std::vector<Preparation> preps{Preparation::uniform(n)};
    for (std::uint64_t s : {11ull, 12ull, 13ull}) {
        preps.push_back(Preparation::seeded_random(n, s));
    }
    for (const Preparation& prep : preps) {
        for (const IterateVariant variant : {IterateVariant::MinusSign, IterateVariant::Squared}) {
            Oracle oracle(n, pick_x0(n, 6));
            const IterationTrace trace = run(oracle, prep, variant, budget, 1);
            for (const IterationRecord& rec : trace.records) {
                dev = std::max(dev, rec.residual);
            }
        }
    }
    return make_result("plane-confinement", dev, 1e-9,
                       "out-of-plane norm of every iterate, uniform + 3 random preps, n = 8");
}

CheckResult check_plane_realness() {
    double dev = 0.0;
    const int n = 8;
    const int budget = default_budget(n);
    std::vector<Preparation> preps{Preparation::uniform(n)};
    for (std::uint64_t s : {21ull, 22ull}) preps.push_back(Preparation::seeded_random(n, s));
    for (const Preparation& prep : preps) {
        for (const IterateVariant variant : {IterateVariant::MinusSign, IterateVariant::Squared}) {
            Oracle oracle(n, pick_x0(n, 7));
            const StateVector u0 = prepare_start(prep);
            const PlaneBasis basis =
                build_plane_basis(u0, StateVector::basis(n, oracle.marked_index()));
            StateVector state = u0;
            for (int k = 0;; ++k) {
                dev = std::max(dev, project_to_plane(state, basis).imag_residual);
                if (k == budget) break;
                state = grover_step(state, oracle, u0, variant);
            }
        }
    }
    return make_result("plane-realness", dev, 1e-9,
                       "imaginary part of plane coordinates after phase factoring, n = 8");
}

CheckResult check_angle_additivity() {
    double dev = 0.0;
    for (int n = 2; n <= 12; ++n) {
        Oracle oracle(n, pick_x0(n, 8));
        const IterationTrace trace = run(oracle, Preparation::uniform(n),
                                         IterateVariant::MinusSign, default_budget(n), 1);
        for (const IterationRecord& rec : trace.records) {
            const double theta = std::atan2(rec.c2, rec.c1);
            dev = std::max(dev, std::abs(wrap_pi(theta - 2.0 * rec.iter * trace.alpha)));
        }
    }
    return make_result("angle-additivity", dev, 1e-9,
                       "plane angle of iterate k is (2k+1)a - a from the start axis, n in [2,12]");
}

CheckResult check_variant_relation() {
    double dev = 0.0;
    for (const int n : {3, 6, 9}) {
        Oracle oracle(n, pick_x0(n, 9));
        const StateVector u0 = StateVector::uniform(n);
        const PlaneBasis basis =
            build_plane_basis(u0, StateVector::basis(n, oracle.marked_index()));
        RandomEngine eng = make_engine(derive_stream(113, n));
        for (int t = 0; t < 50; ++t) {
            const auto [a, b] = random_unit_coeffs(eng);
            const StateVector in_plane = combine(a, basis.e1, b, basis.e2);
            const StateVector lhs =
                grover_step(in_plane, oracle, u0, IterateVariant::MinusSign);
            const StateVector rhs =
                reflect_about_state(basis.e2, oracle.apply_ix0(in_plane));
            dev = std::max(dev, max_amp_dev(lhs, rhs));
        }
    }
    return make_result("variant-relation", dev, kOperatorTol,
                       "minus-sign step vs reflection about the in-plane orthogonal axis");
}

CheckResult check_monotone_approach() {
    double worst_violation = 0.0;
    double min_increment = 1.0;
    for (int n = 2; n <= 12; ++n) {
        const double alpha =
            std::asin(1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << n)));
        const int k_star = optimal_iterations(alpha);
        Oracle oracle(n, pick_x0(n, 10));
        const IterationTrace trace =
            run(oracle, Preparation::uniform(n), IterateVariant::MinusSign, k_star, 1);
        for (int k = 0; k + 1 <= k_star; ++k) {
            const double inc =
                trace.records[k + 1].success_prob - trace.records[k].success_prob;
            min_increment = std::min(min_increment, inc);
            if (inc <= 0.0) worst_violation = std::max(worst_violation, -inc);
        }
    }
    std::ostringstream detail;
    detail << "success probability strictly increases up to the stopping point; "
           << "smallest step " << std::scientific << std::setprecision(2) << min_increment;
    return make_result("monotone-approach", worst_violation, 0.0, detail.str());
}

CheckResult check_squared_rotation() {
    double dev = 0.0;
    bool bounds_ok = true;
    for (const int n : {4, 6, 8, 10}) {
        const double num_states = static_cast<double>(std::uint64_t{1} << n);
        const double alpha = std::asin(1.0 / std::sqrt(num_states));
        const RotationModel model = RotationModel::from_overlap(1.0 / std::sqrt(num_states));
        Oracle oracle(n, pick_x0(n, 11));
        const IterationTrace trace = run(oracle, Preparation::uniform(n),
                                         IterateVariant::Squared, default_budget(n), 1);
        for (std::size_t m = 0; m + 1 < trace.records.size(); ++m) {
            const double th0 = std::atan2(trace.records[m].c2, trace.records[m].c1);
            const double th1 = std::atan2(trace.records[m + 1].c2, trace.records[m + 1].c1);
            const double ccw = wrap_pi(th1 - th0);
            const double cw = 2.0 * kPi - ccw; // one step, measured the other way round
            dev = std::max(dev, std::abs(cw - (2.0 * kPi - 4.0 * alpha)));
        }
        // 4*beta and 2*pi - 4*alpha are the same angle.
        dev = std::max(dev, std::abs(4.0 * model.beta - (2.0 * kPi - 4.0 * alpha)));
        // Distance from a full turn is 4*alpha = 4/sqrt(N) + O(N^{-3/2}).
        const double gap = 4.0 * alpha - 4.0 / std::sqrt(num_states);
        if (num_states >= 16.0 && !(gap > 0.0 && gap < 4.0 * std::pow(num_states, -1.5))) {
            bounds_ok = false;
        }
    }
    CheckResult r = make_result(
        "squared-step-rotation", dev, 1e-9,
        "per-step plane rotation is a near-full turn 2pi - 4a; gap from 2pi is 4/sqrt(N) + O(N^-1.5)");
    r.passed = r.passed && bounds_ok;
    return r;
}

CheckResult check_random_u_efficacy() {
    const int n = 8;
    const int budget = default_budget(n);
    const int trials = 100;
    int reached = 0;
    for (int t = 0; t < trials; ++t) {
        Oracle oracle(n, pick_x0(n, 12));
        const Preparation prep = Preparation::seeded_random(n, derive_stream(42, t));
        const IterationTrace trace = run(oracle, prep, IterateVariant::MinusSign, budget, 1);
        if (trace.best_prob > 0.5) ++reached;
    }
    const double failing_fraction = 1.0 - static_cast<double>(reached) / trials;
    std::ostringstream detail;
    detail << reached << "/" << trials
           << " random preparations reach success > 0.5 within 3*ceil(sqrt(N)) iterations";
    return make_result("random-prep-efficacy", failing_fraction, 0.10, detail.str());
}

CheckResult check_output_determinism() {
    double dev = 0.0;
    const auto render = [] {
        Oracle oracle(5, pick_x0(5, 13));
        const IterationTrace trace =
            run(oracle, Preparation::uniform(5), IterateVariant::MinusSign, 12, 9);
        std::ostringstream os;
        write_trace_csv(os, trace);
        return os.str();
    };
    if (render() != render()) dev = 1.0;

    const double corpus[] = {0.1,    1.0 / 3.0, 1e-300, -0.0,  9007199254740993.0,
                             kPi,    1e308,     5e-324, -2.5e7, 0.4999999999999999};
    for (const double x : corpus) {
        const std::string text = format_double(x);
        double back = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), back);
        if (res.ec != std::errc{} || std::memcmp(&back, &x, sizeof x) != 0) dev = 1.0;
    }
    return make_result("output-determinism", dev, 0.0,
                       "byte-identical repeated CSV; decimal round-trip on edge-case reals");
}

std::vector<CheckResult> run_all(const std::string& only) {
    using CheckFn = CheckResult (*)();
    const std::pair<const char*, CheckFn> registry[] = {
        {"rotation-composition", &check_rotation_composition},
        {"orthocomplement-reflection-2d", &check_reflection_pair_2d},
        {"reflection-involution", &check_reflection_involution},
        {"norm-preservation", &check_norm_preservation},
        {"reflection-linearity", &check_reflection_linearity},
        {"plane-preservation", &check_plane_preservation},
        {"conjugated-reflection", &check_conjugated_reflection},
        {"oracle-involutions", &check_oracle_involutions},
        {"oracle-equivalences", &check_oracle_equivalences},
        {"query-accounting", &check_query_accounting},
        {"closed-form-agreement", [] { return check_closed_form_agreement(&grover_step); }},
        {"plane-confinement", &check_plane_confinement},
        {"plane-realness", &check_plane_realness},
        {"angle-additivity", &check_angle_additivity},
        {"variant-relation", &check_variant_relation},
        {"monotone-approach", &check_monotone_approach},
        {"squared-step-rotation", &check_squared_rotation},
        {"random-prep-efficacy", &check_random_u_efficacy},
        {"output-determinism", &check_output_determinism},
    };
    std::vector<CheckResult> results;
    for (const auto& [name, fn] : registry) {
        if (!only.empty() && std::string_view(name).find(only) == std::string_view::npos) {
            continue;
        }
        results.push_back(fn());
    }
    return results;
}

int print_report(std::ostream& os, const std::vector<CheckResult>& results) {
    int failures = 0;
    for (const CheckResult& r : results) {
        if (!r.passed) ++failures;
        os << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(32) << r.name
           << " max dev " << std::scientific << std::setprecision(3) << r.deviation
           << "  (tol " << std::setprecision(0) << r.tolerance << ")  " << r.detail << "\n";
    }
    os << results.size() - failures << "/" << results.size() << " properties passed\n";
    return failures;
}

} // namespace grover::verify
