#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace grover {

using Amplitude = std::complex<double>;

// Tolerance for the statevector normalization invariant and for operator
// identities; closed-form scalar checks use the tighter kScalarTol.
inline constexpr double kNormTol = 1e-10;
inline constexpr double kOperatorTol = 1e-10;
inline constexpr double kScalarTol = 1e-12;

// Dense n-qubit statevector of 2^n complex amplitudes. Basis index x is the
// little-endian integer value of the qubit string. Values are immutable once
// constructed; every operation returns a new StateVector. Construction
// enforces unit norm (within kNormTol) and finite components -- states are
// never silently renormalized, so norm drift surfaces as an error.
class StateVector {
public:
    StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

    static StateVector basis(int n_qubits, std::uint64_t index);
    static StateVector uniform(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t index) const { return amps_.at(index); }

private:
    int n_qubits_;
    std::vector<Amplitude> amps_;
};

// Dense unitary matrix, row-major. Capped at dim <= 1024: dense matrices are
// for explicit/random preparations and oracle verification only; reflections
// on statevectors are always O(N) kernels, never materialized matrices.
class DenseUnitary {
public:
    static constexpr std::size_t kMaxDim = 1024;

    // Validates finiteness and U†U = I within kOperatorTol.
    DenseUnitary(std::size_t dim, std::vector<Amplitude> entries);

    static DenseUnitary identity(std::size_t dim);
    static DenseUnitary walsh_hadamard(int n_qubits);

    std::size_t dim() const { return dim_; }
    Amplitude entry(std::size_t row, std::size_t col) const;
    const std::vector<Amplitude>& entries() const { return entries_; }

    StateVector apply(const StateVector& state) const;
    StateVector apply_adjoint(const StateVector& state) const;
    StateVector column(std::size_t col) const;
    double max_unitarity_deviation() const;

private:
    std::size_t dim_;
    std::vector<Amplitude> entries_; // row-major
};

// <a|b> with conjugation on the first argument.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// I_|mirror> applied to target: target - 2<mirror|target> mirror. One inner
// product plus one scaled subtraction, O(N).
StateVector reflect_about_state(const StateVector& mirror, const StateVector& target);

// I_D for a subspace D given by a pairwise-orthonormal basis:
// target - 2 sum_d <d|target> d. Empty basis is the identity.
StateVector reflect_about_subspace(std::span<const StateVector> basis,
                                   const StateVector& target);

// U I_|psi> U^-1 applied to target; equals reflect_about_state(U psi, target)
// within kOperatorTol.
StateVector conjugated_reflection(const DenseUnitary& u, const StateVector& psi,
                                  const StateVector& target);

// Standard-basis measurement: returns index x with probability |<x|state>|^2,
// deterministic for a given seed.
std::uint64_t measure_sample(const StateVector& state, std::uint64_t rng_seed);

StateVector negated(const StateVector& state);

// Pairwise (cascade) summation; deterministic and accurate enough to keep the
// norm check meaningful at N = 2^24.
double pairwise_sum(std::span<const double> values);

} // namespace grover
