#pragma once

#include "grover/oracle.hpp"
#include "grover/state_vector.hpp"
#include "grover/variant.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace grover {

// The unitary U defining the start state |psi0> = U|0>. Uniform denotes the
// Walsh-Hadamard preparation (all amplitudes 1/sqrt(N)); SeededRandom denotes
// the seeded Haar-random unitary of random_unitary(), of which only the first
// column is ever needed.
class Preparation {
public:
    enum class Kind { Uniform, ExplicitUnitary, SeededRandom };

    static Preparation uniform(int n_qubits);
    static Preparation explicit_unitary(DenseUnitary u);
    static Preparation seeded_random(int n_qubits, std::uint64_t seed);

    Kind kind() const { return kind_; }
    int n_qubits() const { return n_qubits_; }
    std::uint64_t seed() const { return seed_; }
    const DenseUnitary& matrix() const;

    // True when the rotation angle is computable without querying the oracle
    // more than the run itself does (uniform and explicit preparations).
    bool alpha_known() const { return kind_ != Kind::SeededRandom; }

private:
    Preparation(Kind kind, int n_qubits) : kind_(kind), n_qubits_(n_qubits) {}

    Kind kind_;
    int n_qubits_;
    std::uint64_t seed_ = 0;
    std::shared_ptr<const DenseUnitary> matrix_; // ExplicitUnitary only
};

struct IterationRecord {
    int iter = 0;
    Amplitude overlap{0.0, 0.0}; // <x0|psi_k>
    double success_prob = 0.0;   // |overlap|^2
    double predicted_prob = 0.0; // rotation-model prediction
    std::uint64_t queries = 0;   // cumulative oracle queries after k steps
    // Plane instrumentation (meaningless when the trace is degenerate_plane).
    double c1 = 0.0;
    double c2 = 0.0;
    double residual = 0.0; // out-of-plane norm
};

struct IterationTrace {
    int n = 0;
    IterateVariant variant = IterateVariant::MinusSign;
    double alpha = 0.0;              // asin |<x0|U|0>|, instrumentation
    bool zero_overlap_start = false; // |<x0|U|0>| < 1e-14: zero-angle rotation
    bool degenerate_plane = false;   // U|0> parallel to |x0>
    std::vector<IterationRecord> records; // k = 0 .. max_iters
    std::uint64_t measured = 0;      // sampled outcome after the last iterate
    bool found = false;
    int best_iter = 0;               // argmax of success_prob (ties: smallest k)
    double best_prob = 0.0;
    std::uint64_t total_queries = 0;
};

// |psi0> = U|0>.
StateVector prepare_start(const Preparation& prep);

// One application of the iterate to `state`. u0 must be prepare_start(prep);
// the U I_0 U^-1 factor is realized as the O(N) reflection about u0.
// MinusSign consumes one oracle query, Squared two.
StateVector grover_step(const StateVector& state, Oracle& oracle,
                        const StateVector& u0, IterateVariant variant);

// sin^2((2k+1) alpha): success probability after k iterations of the
// minus-sign iterate starting from angle alpha.
double predicted_success(int k, double alpha);

// The k >= 0 minimizing |(2k+1) alpha - pi/2|, ties toward smaller k.
// Throws for alpha = 0 (no finite k reaches the target angle).
int optimal_iterations(double alpha);

// Iteration-count budget 3 * ceil(sqrt(N)); the constant 3 is a harness
// choice, not a derived bound.
int default_budget(int n_qubits);

// Probability that a classical scan of k records out of N finds the marked one.
double classical_baseline(std::uint64_t total, std::uint64_t examined);

// Haar-random unitary: complex Gaussian matrix (column-major draw order),
// orthonormalized by twice-iterated modified Gram-Schmidt. The R-diagonal of
// the implied QR factorization is positive, which makes the result unique and
// the distribution rotation-invariant. Reproducible from the seed.
DenseUnitary random_unitary(std::uint64_t seed, std::size_t dim);

// Iterates grover_step from prepare_start(prep), recording per-iteration
// overlap, success probability, the rotation-model prediction, query count,
// and plane coordinates. Finishes with one standard-basis sample, graded
// against the oracle. Search decisions never consult the marked index; the
// angle and overlaps in the trace are instrumentation.
IterationTrace run(Oracle& oracle, const Preparation& prep, IterateVariant variant,
                   int max_iters, std::uint64_t rng_seed);

} // namespace grover
