#pragma once

#include "grover/state_vector.hpp"

#include <cstdint>

namespace grover {

// The black-box query model around the hidden marked string x0. Every public
// apply_* call costs exactly one query, including the constructions that
// synthesize one oracle from the other (each makes a single internal query).
//
// The marked index is private: search code interacts with the oracle only
// through apply_* and grade(); marked_index() exists for grading and run
// instrumentation, never for search decisions.
//
// Conventions: basis index x is the little-endian integer value of the qubit
// string; the U_f output qubit is the highest index (bit n).
class Oracle {
public:
    Oracle(int n, std::uint64_t x0);

    int n() const { return n_; }
    std::uint64_t query_count() const { return query_count_; }

    // U_f |x>|y> = |x>|y xor f(x)> on n+1 qubits.
    StateVector apply_uf(const StateVector& state);

    // I_x0: negates the amplitude of |x0>, n qubits.
    StateVector apply_ix0(const StateVector& state);

    // I_x0 realized through one U_f query with the output register prepared
    // in (|0> - |1>)/sqrt(2). Checks that the output factor comes back
    // unchanged and returns the n-qubit input register.
    StateVector ix0_via_uf(const StateVector& state);

    // J_x0: I_x0 on the input register, controlled by the output qubit.
    StateVector apply_jx0(const StateVector& state);

    // U_f realized as H_out, J_x0, H_out.
    StateVector uf_via_jx0(const StateVector& state);

    bool grade(std::uint64_t guess) const { return guess == x0_; }

    // Instrumentation/grading access to the hidden string.
    std::uint64_t marked_index() const { return x0_; }

private:
    void require_width(const StateVector& state, int qubits, const char* op) const;

    int n_;
    std::uint64_t x0_;
    std::uint64_t query_count_ = 0;
};

} // namespace grover
