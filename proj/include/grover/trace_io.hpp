#pragma once

#include "grover/engine.hpp"
#include "grover/geometry.hpp"
#include "grover/state_vector.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace grover {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);

// "0x" + lowercase hex digits, no leading zeros.
std::string to_hex(std::uint64_t x);

// Accepts an optional "0x" prefix; throws std::invalid_argument on bad digits
// or overflow.
std::uint64_t parse_hex(const std::string& text);

// Header: iter,overlap_re,overlap_im,success_prob,predicted_prob,queries
void write_trace_csv(std::ostream& os, const IterationTrace& trace);

nlohmann::json trace_to_json(const IterationTrace& trace);

// {"n_qubits": n, "amplitudes": [[re, im], ...]}
nlohmann::json state_to_json(const StateVector& state);
StateVector state_from_json(const nlohmann::json& j);

// Row-major complex entries in the same [[re, im], ...] encoding.
nlohmann::json unitary_to_json(const DenseUnitary& u);
DenseUnitary unitary_from_json(const nlohmann::json& j);

// {"n": n, "x0_hex": "0x..."}
nlohmann::json oracle_spec_to_json(int n_qubits, std::uint64_t x0);
struct OracleSpec {
    int n = 0;
    std::uint64_t x0 = 0;
};
OracleSpec oracle_spec_from_json(const nlohmann::json& j);

nlohmann::json geometry_report_to_json(const RotationModel& model,
                                       const TraceComparison& comparison);

} // namespace grover
