#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace grover {

// All randomness flows through std::mt19937_64, whose raw output sequence is
// fixed by the C++ standard for a given 64-bit seed. The distribution
// transforms below are hand-rolled because std::uniform_real_distribution and
// std::normal_distribution are implementation-defined and would not reproduce
// across standard libraries.
using RandomEngine = std::mt19937_64;

inline RandomEngine make_engine(std::uint64_t seed) { return RandomEngine(seed); }

// Uniform double in [0, 1), using the top 53 bits of one engine draw.
inline double uniform01(RandomEngine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Standard complex Gaussian via Box-Muller; consumes exactly two draws.
inline std::complex<double> complex_gaussian(RandomEngine& eng) {
    const double u1 = 1.0 - uniform01(eng); // (0, 1], keeps log finite
    const double u2 = uniform01(eng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

// Uniform index in [0, n) for power-of-two n.
inline std::uint64_t uniform_pow2_index(RandomEngine& eng, std::uint64_t n) {
    return eng() & (n - 1);
}

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent seed stream from (seed, salt0, salt1). Used to give
// every trial in a sweep its own reproducible stream.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t salt0,
                                   std::uint64_t salt1 = 0) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ salt0);
    h = mix64(h ^ salt1);
    return h;
}

} // namespace grover
