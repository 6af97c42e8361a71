#include "grover/trace_io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace grover {

namespace {

nlohmann::json complex_to_json(Amplitude a) {
    return nlohmann::json::array({a.real(), a.imag()});
}

Amplitude complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected a [re, im] pair");
    }
    return Amplitude(j[0].get<double>(), j[1].get<double>());
}

std::vector<Amplitude> amplitudes_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of [re, im] pairs");
    std::vector<Amplitude> amps;
    amps.reserve(j.size());
    for (const auto& entry : j) amps.push_back(complex_from_json(entry));
    return amps;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, res.ptr);
}

std::string to_hex(std::uint64_t x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, 16);
    return "0x" + std::string(buf, res.ptr);
}

std::uint64_t parse_hex(const std::string& text) {
    std::size_t pos = 0;
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) pos = 2;
    if (pos == text.size()) throw std::invalid_argument("empty hex literal: '" + text + "'");
    std::uint64_t value = 0;
    const auto res = std::from_chars(text.data() + pos, text.data() + text.size(), value, 16);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("invalid hex literal: '" + text + "'");
    }
    return value;
}

void write_trace_csv(std::ostream& os, const IterationTrace& trace) {
    os << "iter,overlap_re,overlap_im,success_prob,predicted_prob,queries\n";
    for (const IterationRecord& rec : trace.records) {
        os << rec.iter << ',' << format_double(rec.overlap.real()) << ','
           << format_double(rec.overlap.imag()) << ',' << format_double(rec.success_prob)
           << ',' << format_double(rec.predicted_prob) << ',' << rec.queries << '\n';
    }
}

nlohmann::json trace_to_json(const IterationTrace& trace) {
    nlohmann::json records = nlohmann::json::array();
    for (const IterationRecord& rec : trace.records) {
        records.push_back({
            {"iter", rec.iter},
            {"overlap", complex_to_json(rec.overlap)},
            {"success_prob", rec.success_prob},
            {"predicted_prob", rec.predicted_prob},
            {"queries", rec.queries},
            {"plane_coords", nlohmann::json::array({rec.c1, rec.c2})},
            {"plane_residual", rec.residual},
        });
    }
    return {
        {"n", trace.n},
        {"variant", to_string(trace.variant)},
        {"alpha", trace.alpha},
        {"zero_overlap_start", trace.zero_overlap_start},
        {"degenerate_plane", trace.degenerate_plane},
        {"records", std::move(records)},
        {"measured", to_hex(trace.measured)},
        {"found", trace.found},
        {"best_iter", trace.best_iter},
        {"best_prob", trace.best_prob},
        {"total_queries", trace.total_queries},
    };
}

nlohmann::json state_to_json(const StateVector& state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Amplitude& a : state.amplitudes()) amps.push_back(complex_to_json(a));
    return {{"n_qubits", state.n_qubits()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const nlohmann::json& j) {
    return StateVector(j.at("n_qubits").get<int>(), amplitudes_from_json(j.at("amplitudes")));
}

nlohmann::json unitary_to_json(const DenseUnitary& u) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t k = 0; k < u.dim(); ++k) entries.push_back(complex_to_json(u.entry(i, k)));
    }
    return {{"dim", u.dim()}, {"entries", std::move(entries)}};
}

DenseUnitary unitary_from_json(const nlohmann::json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    return DenseUnitary(dim, amplitudes_from_json(j.at("entries")));
}

nlohmann::json oracle_spec_to_json(int n_qubits, std::uint64_t x0) {
    return {{"n", n_qubits}, {"x0_hex", to_hex(x0)}};
}

OracleSpec oracle_spec_from_json(const nlohmann::json& j) {
    OracleSpec spec;
    spec.n = j.at("n").get<int>();
    spec.x0 = parse_hex(j.at("x0_hex").get<std::string>());
    return spec;
}

nlohmann::json geometry_report_to_json(const RotationModel& model,
                                       const TraceComparison& comparison) {
    return {
        {"alpha", model.alpha},
        {"beta", model.beta},
        {"max_prob_deviation", comparison.max_prob_dev},
        {"max_coord_deviation", comparison.max_coord_dev},
        {"max_plane_residual", comparison.max_residual},
    };
}

} // namespace grover
