#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grover {

// The two iterate flavors: Q = -I_{U|0>} I_x0 (one query per step), and the
// unsigned square (I_{U|0>} I_x0)^2 (two queries per step).
enum class IterateVariant { MinusSign, Squared };

inline int queries_per_step(IterateVariant v) {
    return v == IterateVariant::Squared ? 2 : 1;
}

inline std::string_view to_string(IterateVariant v) {
    return v == IterateVariant::Squared ? "squared" : "minus";
}

inline IterateVariant parse_variant(std::string_view s) {
    if (s == "minus") return IterateVariant::MinusSign;
    if (s == "squared") return IterateVariant::Squared;
    throw std::invalid_argument("unknown variant '" + std::string(s) +
                                "' (expected minus|squared)");
}

} // namespace grover
