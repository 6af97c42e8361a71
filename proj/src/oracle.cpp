#include "grover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace grover {

namespace {

// U_f on raw amplitudes: f(x) = [x == x0], so the only effect is swapping the
// two components (x0, y=0) and (x0, y=1).
void uf_kernel(std::vector<Amplitude>& amps, int n, std::uint64_t x0) {
    const std::uint64_t y_bit = std::uint64_t{1} << n;
    std::swap(amps[x0], amps[x0 | y_bit]);
}

// J_x0 on raw amplitudes: I_x0 on components whose control (output) bit is 1.
void jx0_kernel(std::vector<Amplitude>& amps, int n, std::uint64_t x0) {
    const std::uint64_t y_bit = std::uint64_t{1} << n;
    amps[x0 | y_bit] = -amps[x0 | y_bit];
}

// Single-qubit Hadamard on qubit q.
void hadamard_on_qubit(std::vector<Amplitude>& amps, int q) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t half = std::size_t{1} << q;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < amps.size(); base += stride) {
        for (std::size_t i = 0; i < half; ++i) {
            const Amplitude a = amps[base + i];
            const Amplitude b = amps[base + i + half];
            amps[base + i] = (a + b) * inv_sqrt2;
            amps[base + i + half] = (a - b) * inv_sqrt2;
        }
    }
}

} // namespace

Oracle::Oracle(int n, std::uint64_t x0) : n_(n), x0_(x0) {
    if (n < 1 || n > 30) {
        throw std::invalid_argument("oracle width must be in [1, 30], got " +
                                    std::to_string(n));
    }
    if (x0 >= (std::uint64_t{1} << n)) {
        throw std::invalid_argument("marked index " + std::to_string(x0) +
                                    " out of range for n = " + std::to_string(n));
    }
}

void Oracle::require_width(const StateVector& state, int qubits, const char* op) const {
    if (state.n_qubits() != qubits) {
        std::ostringstream msg;
        msg << op << ": expected " << qubits << " qubits, got " << state.n_qubits();
        throw std::invalid_argument(msg.str());
    }
}

StateVector Oracle::apply_uf(const StateVector& state) {
    require_width(state, n_ + 1, "apply_uf");
    ++query_count_;
    std::vector<Amplitude> amps = state.amplitudes();
    uf_kernel(amps, n_, x0_);
    return StateVector(n_ + 1, std::move(amps));
}

StateVector Oracle::apply_ix0(const StateVector& state) {
    require_width(state, n_, "apply_ix0");
    ++query_count_;
    std::vector<Amplitude> amps = state.amplitudes();
    amps[x0_] = -amps[x0_];
    return StateVector(n_, std::move(amps));
}

StateVector Oracle::ix0_via_uf(const StateVector& state) {
    require_width(state, n_, "ix0_via_uf");
    ++query_count_;

    // Extend with the output qubit in (|0> - |1>)/sqrt(2), query U_f once.
    const std::size_t dim = state.dim();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Amplitude> ext(2 * dim);
    const auto& in = state.amplitudes();
    for (std::size_t x = 0; x < dim; ++x) {
        ext[x] = in[x] * inv_sqrt2;
        ext[x + dim] = -in[x] * inv_sqrt2;
    }
    uf_kernel(ext, n_, x0_);

    // The output register must still factor as (|0> - |1>)/sqrt(2), i.e. the
    // y=1 block is the negation of the y=0 block.
    double worst = 0.0;
    std::vector<Amplitude> out(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        worst = std::max(worst, std::abs(ext[x] + ext[x + dim]));
        out[x] = (ext[x] - ext[x + dim]) * inv_sqrt2;
    }
    if (worst > kOperatorTol) {
        std::ostringstream msg;
        msg << "ix0_via_uf: output register disturbed, max deviation " << worst;
        throw std::logic_error(msg.str());
    }
    return StateVector(n_, std::move(out));
}

StateVector Oracle::apply_jx0(const StateVector& state) {
    require_width(state, n_ + 1, "apply_jx0");
    ++query_count_;
    std::vector<Amplitude> amps = state.amplitudes();
    jx0_kernel(amps, n_, x0_);
    return StateVector(n_ + 1, std::move(amps));
}

StateVector Oracle::uf_via_jx0(const StateVector& state) {
    require_width(state, n_ + 1, "uf_via_jx0");
    ++query_count_;
    std::vector<Amplitude> amps = state.amplitudes();
    hadamard_on_qubit(amps, n_);
    jx0_kernel(amps, n_, x0_);
    hadamard_on_qubit(amps, n_);
    return StateVector(n_ + 1, std::move(amps));
}

} // namespace grover
