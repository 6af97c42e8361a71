#include "grover/engine.hpp"

#include "grover/geometry.hpp"
#include "grover/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>

namespace grover {

namespace {

constexpr double kZeroOverlapTol = 1e-14;
constexpr double kDegeneratePlaneTol = 1e-14;

// Shared by random_unitary and the seeded-random preparation so that the
// latter reproduces column 0 of the former bit for bit.
double normalize_column(std::vector<Amplitude>& v) {
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = std::norm(v[i]);
    const double r = std::sqrt(pairwise_sum(sq));
    if (!(r > 0.0)) throw std::runtime_error("degenerate column in random draw");
    for (auto& a : v) a /= r;
    return r;
}

std::vector<Amplitude> gaussian_column(RandomEngine& eng, std::size_t dim) {
    std::vector<Amplitude> col(dim);
    for (auto& a : col) a = complex_gaussian(eng);
    return col;
}

int qubits_for_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("dimension must be a power of two >= 2, got " +
                                    std::to_string(dim));
    }
    return std::countr_zero(dim);
}

} // namespace

Preparation Preparation::uniform(int n_qubits) {
    return Preparation(Kind::Uniform, n_qubits);
}

Preparation Preparation::explicit_unitary(DenseUnitary u) {
    const int n = qubits_for_dim(u.dim());
    Preparation p(Kind::ExplicitUnitary, n);
    p.matrix_ = std::make_shared<const DenseUnitary>(std::move(u));
    return p;
}

Preparation Preparation::seeded_random(int n_qubits, std::uint64_t seed) {
    Preparation p(Kind::SeededRandom, n_qubits);
    p.seed_ = seed;
    return p;
}

const DenseUnitary& Preparation::matrix() const {
    if (!matrix_) throw std::logic_error("preparation carries no explicit matrix");
    return *matrix_;
}

StateVector prepare_start(const Preparation& prep) {
    switch (prep.kind()) {
    case Preparation::Kind::Uniform:
        return StateVector::uniform(prep.n_qubits());
    case Preparation::Kind::ExplicitUnitary:
        return prep.matrix().column(0);
    case Preparation::Kind::SeededRandom: {
        // First column of the seeded Haar-random unitary: the first dim
        // Gaussian draws, normalized. O(N), no matrix materialized.
        RandomEngine eng = make_engine(prep.seed());
        const std::size_t dim = std::size_t{1} << prep.n_qubits();
        std::vector<Amplitude> col = gaussian_column(eng, dim);
        normalize_column(col);
        return StateVector(prep.n_qubits(), std::move(col));
    }
    }
    throw std::logic_error("unreachable preparation kind");
}

StateVector grover_step(const StateVector& state, Oracle& oracle,
                        const StateVector& u0, IterateVariant variant) {
    if (u0.n_qubits() != oracle.n()) {
        throw std::invalid_argument("grover_step: start state width does not match oracle");
    }
    StateVector once = reflect_about_state(u0, oracle.apply_ix0(state));
    if (variant == IterateVariant::MinusSign) {
        return negated(once);
    }
    return reflect_about_state(u0, oracle.apply_ix0(once));
}

double predicted_success(int k, double alpha) {
    if (k < 0) throw std::invalid_argument("iteration count must be >= 0");
    const double s = std::sin((2.0 * k + 1.0) * alpha);
    return s * s;
}

int optimal_iterations(double alpha) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(alpha > 0.0)) {
        throw std::domain_error(
            "optimal_iterations: alpha = 0 (start state orthogonal to the marked "
            "state; the iterate is a rotation through angle zero)");
    }
    if (alpha > half_pi + kScalarTol) {
        throw std::invalid_argument("optimal_iterations: alpha exceeds pi/2");
    }
    const double ideal = half_pi / (2.0 * alpha) - 0.5;
    const long lo = std::max(0L, static_cast<long>(std::floor(ideal)));
    long best = lo;
    double best_dev = std::abs((2.0 * lo + 1.0) * alpha - half_pi);
    const double hi_dev = std::abs((2.0 * (lo + 1) + 1.0) * alpha - half_pi);
    if (hi_dev < best_dev) {
        best = lo + 1;
        best_dev = hi_dev;
    }
    return static_cast<int>(best);
}

int default_budget(int n_qubits) {
    const double root = std::sqrt(static_cast<double>(std::uint64_t{1} << n_qubits));
    return 3 * static_cast<int>(std::ceil(root));
}

double classical_baseline(std::uint64_t total, std::uint64_t examined) {
    if (total == 0) throw std::invalid_argument("classical_baseline: empty search space");
    if (examined > total) {
        throw std::invalid_argument("classical_baseline: examined more records than exist");
    }
    return static_cast<double>(examined) / static_cast<double>(total);
}

DenseUnitary random_unitary(std::uint64_t seed, std::size_t dim) {
    if (dim < 1 || dim > DenseUnitary::kMaxDim) {
        throw std::invalid_argument("random_unitary dim must be in [1, " +
                                    std::to_string(DenseUnitary::kMaxDim) + "], got " +
                                    std::to_string(dim));
    }
    RandomEngine eng = make_engine(seed);
    std::vector<std::vector<Amplitude>> cols(dim);
    for (auto& col : cols) col = gaussian_column(eng, dim);

    // Modified Gram-Schmidt with one reorthogonalization pass. R_jj > 0 by
    // construction, which pins the unique QR factor and keeps the output
    // Haar-distributed.
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                Amplitude c{0.0, 0.0};
                for (std::size_t k = 0; k < dim; ++k) {
                    c += std::conj(cols[i][k]) * cols[j][k];
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    cols[j][k] -= c * cols[i][k];
                }
            }
        }
        normalize_column(cols[j]);
    }

    std::vector<Amplitude> entries(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            entries[i * dim + j] = cols[j][i];
        }
    }
    return DenseUnitary(dim, std::move(entries));
}

IterationTrace run(Oracle& oracle, const Preparation& prep, IterateVariant variant,
                   int max_iters, std::uint64_t rng_seed) {
    if (max_iters < 0) throw std::invalid_argument("max_iters must be >= 0");
    if (prep.n_qubits() != oracle.n()) {
        throw std::invalid_argument("preparation width does not match oracle width");
    }
    const int n = oracle.n();
    const StateVector u0 = prepare_start(prep);

    // Instrumentation only: the trace compares the simulation against the
    // rotation model, but no stepping or stopping decision reads x0.
    const std::uint64_t x0 = oracle.marked_index();
    const Amplitude start_overlap = u0.amplitude(x0);
    const double overlap_mag = std::abs(start_overlap);

    IterationTrace trace;
    trace.n = n;
    trace.variant = variant;
    trace.alpha = std::asin(std::min(overlap_mag, 1.0));
    trace.zero_overlap_start = overlap_mag < kZeroOverlapTol;
    trace.degenerate_plane = overlap_mag >= 1.0 - kDegeneratePlaneTol;

    std::optional<PlaneBasis> basis;
    if (!trace.degenerate_plane) {
        basis = build_plane_basis(u0, StateVector::basis(n, x0));
    }

    const std::uint64_t queries_at_start = oracle.query_count();
    const int qps = queries_per_step(variant);
    StateVector state = u0;
    trace.records.reserve(static_cast<std::size_t>(max_iters) + 1);
    for (int k = 0;; ++k) {
        IterationRecord rec;
        rec.iter = k;
        rec.overlap = state.amplitude(x0);
        rec.success_prob = std::norm(rec.overlap);
        rec.predicted_prob = predicted_success(k * qps, trace.alpha);
        rec.queries = oracle.query_count() - queries_at_start;
        if (basis) {
            const PlaneProjection proj = project_to_plane(state, *basis);
            rec.c1 = proj.coords.c1;
            rec.c2 = proj.coords.c2;
            rec.residual = proj.residual;
        }
        trace.records.push_back(rec);
        if (k == max_iters) break;
        state = grover_step(state, oracle, u0, variant);
    }
    trace.total_queries = oracle.query_count() - queries_at_start;

    trace.best_iter = 0;
    trace.best_prob = trace.records.front().success_prob;
    for (const IterationRecord& rec : trace.records) {
        if (rec.success_prob > trace.best_prob) {
            trace.best_prob = rec.success_prob;
            trace.best_iter = rec.iter;
        }
    }

    trace.measured = measure_sample(state, rng_seed);
    trace.found = oracle.grade(trace.measured);
    return trace;
}

} // namespace grover
