#include "grover/state_vector.hpp"

#include "grover/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace grover {

namespace {

std::size_t checked_dim(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw std::invalid_argument("n_qubits must be in [1, 30], got " +
                                    std::to_string(n_qubits));
    }
    return std::size_t{1} << n_qubits;
}

void require_same_width(const StateVector& a, const StateVector& b, const char* op) {
    if (a.n_qubits() != b.n_qubits()) {
        std::ostringstream msg;
        msg << op << ": qubit count mismatch (" << a.n_qubits() << " vs "
            << b.n_qubits() << ")";
        throw std::invalid_argument(msg.str());
    }
}

} // namespace

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    const std::size_t dim = checked_dim(n_qubits);
    if (amps_.size() != dim) {
        throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                    " does not match 2^" + std::to_string(n_qubits));
    }
    std::vector<double> probs(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!std::isfinite(amps_[i].real()) || !std::isfinite(amps_[i].imag())) {
            throw std::invalid_argument("non-finite amplitude at index " +
                                        std::to_string(i));
        }
        probs[i] = std::norm(amps_[i]);
    }
    const double norm_sq = pairwise_sum(probs);
    if (std::abs(norm_sq - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << "state is not normalized: |amplitudes|^2 = " << norm_sq
            << " (deviation " << std::abs(norm_sq - 1.0) << " > " << kNormTol << ")";
        throw std::invalid_argument(msg.str());
    }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    const std::size_t dim = checked_dim(n_qubits);
    if (index >= dim) {
        throw std::invalid_argument("basis index " + std::to_string(index) +
                                    " out of range for " + std::to_string(n_qubits) +
                                    " qubits");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::uniform(int n_qubits) {
    const std::size_t dim = checked_dim(n_qubits);
    const double a = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Amplitude> amps(dim, Amplitude{a, 0.0});
    return StateVector(n_qubits, std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    require_same_width(a, b, "inner_product");
    Amplitude acc{0.0, 0.0};
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) {
        acc += std::conj(av[i]) * bv[i];
    }
    return acc;
}

StateVector reflect_about_state(const StateVector& mirror, const StateVector& target) {
    require_same_width(mirror, target, "reflect_about_state");
    const Amplitude c = inner_product(mirror, target);
    std::vector<Amplitude> out = target.amplitudes();
    const auto& m = mirror.amplitudes();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= 2.0 * c * m[i];
    }
    return StateVector(target.n_qubits(), std::move(out));
}

StateVector reflect_about_subspace(std::span<const StateVector> basis,
                                   const StateVector& target) {
    if (basis.empty()) return target;
    double worst = 0.0;
    std::size_t worst_i = 0, worst_j = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        require_same_width(basis[i], target, "reflect_about_subspace");
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const double overlap = std::abs(inner_product(basis[i], basis[j]));
            if (overlap > worst) {
                worst = overlap;
                worst_i = i;
                worst_j = j;
            }
        }
    }
    if (worst > kOperatorTol) {
        std::ostringstream msg;
        msg << "subspace basis is not orthonormal: |<b" << worst_i << "|b" << worst_j
            << ">| = " << worst;
        throw std::invalid_argument(msg.str());
    }
    std::vector<Amplitude> out = target.amplitudes();
    for (const StateVector& d : basis) {
        const Amplitude c = inner_product(d, target);
        const auto& dv = d.amplitudes();
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] -= 2.0 * c * dv[i];
        }
    }
    return StateVector(target.n_qubits(), std::move(out));
}

StateVector conjugated_reflection(const DenseUnitary& u, const StateVector& psi,
                                  const StateVector& target) {
    // (U I_|psi> U^-1) target: apply U^-1 first, reflect, then U.
    return u.apply(reflect_about_state(psi, u.apply_adjoint(target)));
}

std::uint64_t measure_sample(const StateVector& state, std::uint64_t rng_seed) {
    RandomEngine eng = make_engine(rng_seed);
    const double r = uniform01(eng);
    const auto& amps = state.amplitudes();
    double cum = 0.0;
    std::uint64_t last_support = 0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > 0.0) last_support = i;
        cum += p;
        if (r < cum) return i;
    }
    return last_support; // r landed in the rounding gap past the last bin
}

StateVector negated(const StateVector& state) {
    std::vector<Amplitude> out = state.amplitudes();
    for (auto& a : out) a = -a;
    return StateVector(state.n_qubits(), std::move(out));
}

DenseUnitary::DenseUnitary(std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ < 1 || dim_ > kMaxDim) {
        throw std::invalid_argument("dense unitary dim must be in [1, " +
                                    std::to_string(kMaxDim) + "], got " +
                                    std::to_string(dim_));
    }
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("dense unitary entry count does not match dim^2");
    }
    for (const Amplitude& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw std::invalid_argument("non-finite entry in dense unitary");
        }
    }
    const double dev = max_unitarity_deviation();
    if (dev > kOperatorTol) {
        std::ostringstream msg;
        msg << "matrix is not unitary: max |(U^dag U - I)_ij| = " << dev;
        throw std::invalid_argument(msg.str());
    }
}

DenseUnitary DenseUnitary::identity(std::size_t dim) {
    std::vector<Amplitude> e(dim * dim, Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = Amplitude{1.0, 0.0};
    return DenseUnitary(dim, std::move(e));
}

DenseUnitary DenseUnitary::walsh_hadamard(int n_qubits) {
    const std::size_t dim = checked_dim(n_qubits);
    if (dim > kMaxDim) {
        throw std::invalid_argument("walsh_hadamard exceeds the dense dim cap");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Amplitude> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // (-1)^(popcount(i & j)) / sqrt(N)
            const int sign = (std::popcount(i & j) & 1) ? -1 : 1;
            e[i * dim + j] = Amplitude{sign * scale, 0.0};
        }
    }
    return DenseUnitary(dim, std::move(e));
}

Amplitude DenseUnitary::entry(std::size_t row, std::size_t col) const {
    return entries_.at(row * dim_ + col);
}

StateVector DenseUnitary::apply(const StateVector& state) const {
    if (state.dim() != dim_) {
        throw std::invalid_argument("dense unitary dim does not match state dim");
    }
    const auto& in = state.amplitudes();
    std::vector<Amplitude> out(dim_, Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < dim_; ++i) {
        Amplitude acc{0.0, 0.0};
        const Amplitude* row = entries_.data() + i * dim_;
        for (std::size_t j = 0; j < dim_; ++j) acc += row[j] * in[j];
        out[i] = acc;
    }
    return StateVector(state.n_qubits(), std::move(out));
}

StateVector DenseUnitary::apply_adjoint(const StateVector& state) const {
    if (state.dim() != dim_) {
        throw std::invalid_argument("dense unitary dim does not match state dim");
    }
    const auto& in = state.amplitudes();
    std::vector<Amplitude> out(dim_, Amplitude{0.0, 0.0});
    for (std::size_t j = 0; j < dim_; ++j) {
        const Amplitude* row = entries_.data() + j * dim_;
        const Amplitude v = in[j];
        for (std::size_t i = 0; i < dim_; ++i) {
            out[i] += std::conj(row[i]) * v;
        }
    }
    return StateVector(state.n_qubits(), std::move(out));
}

StateVector DenseUnitary::column(std::size_t col) const {
    if (col >= dim_) throw std::invalid_argument("column index out of range");
    int n = 0;
    while ((std::size_t{1} << n) < dim_) ++n;
    if ((std::size_t{1} << n) != dim_) {
        throw std::invalid_argument("column extraction requires a power-of-two dim");
    }
    std::vector<Amplitude> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = entries_[i * dim_ + col];
    return StateVector(n, std::move(out));
}

double DenseUnitary::max_unitarity_deviation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            // (U^dag U)_ij = sum_k conj(U_ki) U_kj
            Amplitude acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += std::conj(entries_[k * dim_ + i]) * entries_[k * dim_ + j];
            }
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

} // namespace grover
