#include "grover/cli.hpp"

#include "grover/geometry.hpp"
#include "grover/oracle.hpp"
#include "grover/rng.hpp"
#include "grover/trace_io.hpp"
#include "grover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace grover::cli {

namespace {

// Independent sub-streams of the user seed.
constexpr std::uint64_t kSaltX0 = 0xa0;
constexpr std::uint64_t kSaltPrep = 0xa1;
constexpr std::uint64_t kSaltMeasure = 0xa2;

int checked_n(int n, bool allow_large) {
    const int ceiling = allow_large ? kHardMaxQubits : kDefaultMaxQubits;
    if (n < 1 || n > ceiling) {
        std::ostringstream msg;
        msg << "n must be in [1, " << ceiling << "], got " << n;
        if (!allow_large && n > kDefaultMaxQubits && n <= kHardMaxQubits) {
            msg << " (pass --allow-large to lift the ceiling; n = " << n << " allocates "
                << (std::uint64_t{16} << n) / (1024 * 1024) << " MiB per statevector)";
        }
        throw std::invalid_argument(msg.str());
    }
    return n;
}

// Smallest m minimizing |(4m+1) alpha - pi/2|: the squared iterate advances
// two minus-sign steps per application.
int optimal_squared_iterations(double alpha) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(alpha > 0.0)) {
        throw std::domain_error(
            "auto iteration count undefined: the start state is orthogonal to the "
            "marked state (rotation through an angle of zero)");
    }
    const double ideal = (half_pi / alpha - 1.0) / 4.0;
    const long lo = std::max(0L, static_cast<long>(std::floor(ideal)));
    const double lo_dev = std::abs((4.0 * lo + 1.0) * alpha - half_pi);
    const double hi_dev = std::abs((4.0 * (lo + 1) + 1.0) * alpha - half_pi);
    return static_cast<int>(hi_dev < lo_dev ? lo + 1 : lo);
}

double known_alpha(const Preparation& prep, std::uint64_t x0) {
    const StateVector u0 = prepare_start(prep);
    return std::asin(std::min(std::abs(u0.amplitude(x0)), 1.0));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::uint64_t parse_x0(const std::string& text, int n_qubits, std::uint64_t seed) {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (text == "random") {
        RandomEngine eng = make_engine(derive_stream(seed, kSaltX0));
        return uniform_pow2_index(eng, dim);
    }
    std::uint64_t value = 0;
    const bool binary_shaped =
        static_cast<int>(text.size()) == n_qubits &&
        std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; });
    if (binary_shaped) {
        for (const char c : text) value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        value = parse_hex(text);
    } else {
        throw std::invalid_argument(
            "--x0 must be 'random', a length-n binary string, or 0x-prefixed hex; got '" +
            text + "'");
    }
    if (value >= dim) {
        throw std::invalid_argument("--x0 " + text + " does not fit in " +
                                    std::to_string(n_qubits) + " qubits");
    }
    return value;
}

ItersSpec parse_iters(const std::string& text) {
    ItersSpec spec;
    if (text == "auto") {
        spec.mode = ItersSpec::Mode::Auto;
        return spec;
    }
    std::string number = text;
    if (text.rfind("budget:", 0) == 0) {
        spec.mode = ItersSpec::Mode::Budget;
        number = text.substr(7);
    } else {
        spec.mode = ItersSpec::Mode::Fixed;
    }
    try {
        std::size_t used = 0;
        const int value = std::stoi(number, &used);
        if (used != number.size() || value < 0) throw std::invalid_argument(number);
        spec.value = value;
    } catch (const std::exception&) {
        throw std::invalid_argument("--iters must be 'auto', a non-negative integer, or "
                                    "'budget:K'; got '" +
                                    text + "'");
    }
    return spec;
}

Preparation build_preparation(const std::string& prep_text, int n_qubits,
                              std::uint64_t seed) {
    if (prep_text == "uniform") return Preparation::uniform(n_qubits);
    if (prep_text == "random") {
        return Preparation::seeded_random(n_qubits, derive_stream(seed, kSaltPrep));
    }
    if (prep_text.rfind("file:", 0) == 0) {
        const std::string path = prep_text.substr(5);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open preparation file: " + path);
        nlohmann::json j;
        in >> j;
        DenseUnitary u = unitary_from_json(j);
        if (u.dim() != std::uint64_t{1} << n_qubits) {
            throw std::invalid_argument("preparation matrix dim " + std::to_string(u.dim()) +
                                        " does not match n = " + std::to_string(n_qubits));
        }
        return Preparation::explicit_unitary(std::move(u));
    }
    throw std::invalid_argument("--prep must be uniform, random, or file:PATH; got '" +
                                prep_text + "'");
}

int resolve_iters(const ItersSpec& spec, const Preparation& prep, std::uint64_t x0,
                  IterateVariant variant) {
    switch (spec.mode) {
    case ItersSpec::Mode::Fixed:
    case ItersSpec::Mode::Budget:
        return spec.value;
    case ItersSpec::Mode::Auto:
        break;
    }
    if (!prep.alpha_known()) {
        throw std::invalid_argument(
            "--iters auto needs a preparation whose rotation angle is computable "
            "(uniform or file:PATH); with --prep random the stopping point is unknowable "
            "-- use --iters budget:K to record the best iterate within a budget");
    }
    const double alpha = known_alpha(prep, x0);
    return variant == IterateVariant::Squared ? optimal_squared_iterations(alpha)
                                              : optimal_iterations(alpha);
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig config;
    config.n = j.at("n").get<int>();
    if (j.contains("x0_hex")) config.x0 = j.at("x0_hex").get<std::string>();
    if (j.contains("prep")) config.prep = j.at("prep").get<std::string>();
    if (j.contains("variant")) config.variant = j.at("variant").get<std::string>();
    if (j.contains("max_iters")) config.iters = std::to_string(j.at("max_iters").get<int>());
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) config.out = j.at("out").get<std::string>();
    if (j.contains("format")) config.format = j.at("format").get<std::string>();
    return config;
}

RunOutput execute_run(const ExperimentConfig& config) {
    const int n = checked_n(config.n, config.allow_large);
    if (config.format != "csv" && config.format != "json") {
        throw std::invalid_argument("--format must be csv or json, got '" + config.format +
                                    "'");
    }
    const IterateVariant variant = parse_variant(config.variant);
    const std::uint64_t x0 = parse_x0(config.x0, n, config.seed);
    const Preparation prep = build_preparation(config.prep, n, config.seed);
    const int max_iters = resolve_iters(parse_iters(config.iters), prep, x0, variant);

    Oracle oracle(n, x0);
    const IterationTrace trace =
        run(oracle, prep, variant, max_iters, derive_stream(config.seed, kSaltMeasure));

    const RotationModel model = RotationModel::from_overlap(std::sin(trace.alpha));
    const TraceComparison comparison = compare_trace(trace, model);

    const std::uint64_t num_states = std::uint64_t{1} << n;
    const double same_budget_classical = classical_baseline(
        num_states, std::min<std::uint64_t>(trace.total_queries, num_states));
    const std::uint64_t classical_examined_for_best = static_cast<std::uint64_t>(
        std::ceil(trace.best_prob * static_cast<double>(num_states)));

    nlohmann::json summary = {
        {"found", trace.found},
        {"measured", to_hex(trace.measured)},
        {"best_iter", trace.best_iter},
        {"best_prob", trace.best_prob},
        {"total_queries", trace.total_queries},
        {"zero_overlap_start", trace.zero_overlap_start},
        {"classical",
         {{"same_queries_success_prob", same_budget_classical},
          {"examined_needed_for_best_prob", classical_examined_for_best}}},
    };
    if (trace.zero_overlap_start) {
        summary["note"] = "start state orthogonal to the marked state: the iterate is a "
                          "rotation through an angle of zero and success stays at 0";
    }

    RunOutput out;
    out.envelope = {
        {"config",
         {{"n", n},
          {"x0_hex", to_hex(x0)},
          {"prep", config.prep},
          {"variant", std::string(to_string(variant))},
          {"max_iters", max_iters},
          {"seed", config.seed}}},
        {"trace", trace_to_json(trace)},
        {"geometry_report", geometry_report_to_json(model, comparison)},
        {"summary", summary},
    };
    if (config.format == "json") {
        out.payload = out.envelope.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        write_trace_csv(csv, trace);
        out.payload = csv.str();
    }

    std::ostringstream status;
    status << "n=" << n << " N=" << num_states << " x0=" << to_hex(x0)
           << " variant=" << to_string(variant) << " iters=" << max_iters
           << " queries=" << trace.total_queries << "\n"
           << "measured=" << to_hex(trace.measured) << " matched=" << yes_no(trace.found)
           << " best_prob=" << format_double(trace.best_prob) << " at iter "
           << trace.best_iter << "\n"
           << "classical scan with the same queries succeeds with prob "
           << format_double(same_budget_classical) << "\n";
    if (trace.zero_overlap_start) {
        status << "warning: zero-overlap start (rotation through an angle of zero)\n";
    }
    out.status = status.str();
    out.found = trace.found;
    out.queries = trace.total_queries;
    out.best_prob = trace.best_prob;
    return out;
}

std::string sweep_csv(int n_min, int n_max, int trials, std::uint64_t seed,
                      IterateVariant variant) {
    if (n_min < 1 || n_min > n_max || n_max > kDefaultMaxQubits) {
        throw std::invalid_argument("sweep range must satisfy 1 <= n_min <= n_max <= " +
                                    std::to_string(kDefaultMaxQubits));
    }
    if (trials < 0) throw std::invalid_argument("trials must be >= 0");

    std::ostringstream os;
    os << "n,N,trial,x0_hex,iters,queries,best_iter,best_prob,found,budget_exceeded,"
          "classical_same_queries\n";
    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t num_states = std::uint64_t{1} << n;
        const double alpha = std::asin(1.0 / std::sqrt(static_cast<double>(num_states)));
        const int k_star = variant == IterateVariant::Squared
                               ? optimal_squared_iterations(alpha)
                               : optimal_iterations(alpha);
        const int budget = default_budget(n);
        const bool exceeded = k_star > budget;
        const int iters = std::min(k_star, budget);
        for (int trial = 0; trial < trials; ++trial) {
            const std::uint64_t stream =
                derive_stream(seed, static_cast<std::uint64_t>(n), trial);
            RandomEngine eng = make_engine(stream);
            const std::uint64_t x0 = uniform_pow2_index(eng, num_states);
            Oracle oracle(n, x0);
            const IterationTrace trace = run(oracle, Preparation::uniform(n), variant,
                                             iters, derive_stream(stream, 1));
            os << n << ',' << num_states << ',' << trial << ',' << to_hex(x0) << ','
               << iters << ',' << trace.total_queries << ',' << trace.best_iter << ','
               << format_double(trace.best_prob) << ',' << (trace.found ? 1 : 0) << ','
               << (exceeded ? 1 : 0) << ','
               << format_double(classical_baseline(
                      num_states, std::min<std::uint64_t>(trace.total_queries, num_states)))
               << '\n';
        }
    }
    return os.str();
}

namespace {

int write_payload(const std::string& payload, const std::string& out_path,
                  std::ostream& status_os, std::ostream& err_os) {
    if (out_path.empty()) {
        status_os << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        err_os << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    out << payload;
    out.flush();
    if (!out) {
        err_os << "error: failed writing output file: " << out_path << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int cmd_run(const ExperimentConfig& config, std::ostream& status_os, std::ostream& err_os) {
    RunOutput result;
    try {
        result = execute_run(config);
    } catch (const std::exception& e) {
        err_os << "error: " << e.what() << "\n";
        return 1;
    }
    const int status = write_payload(result.payload, config.out, status_os, err_os);
    if (status != 0) return status;
    // Keep stdout machine-parseable: when the payload occupies it, the human
    // summary moves to the error stream.
    (config.out.empty() ? err_os : status_os) << result.status;
    return 0;
}

int cmd_sweep(int n_min, int n_max, int trials, std::uint64_t seed,
              IterateVariant variant, const std::string& out_path, std::ostream& status_os,
              std::ostream& err_os) {
    std::string csv;
    try {
        csv = sweep_csv(n_min, n_max, trials, seed, variant);
    } catch (const std::exception& e) {
        err_os << "error: " << e.what() << "\n";
        return 1;
    }
    return write_payload(csv, out_path, status_os, err_os);
}

int cmd_verify(const std::string& only, std::ostream& os, std::ostream& err_os) {
    const std::vector<verify::CheckResult> results = verify::run_all(only);
    if (results.empty()) {
        err_os << "error: no property matches filter '" << only << "'\n";
        return 1;
    }
    return verify::print_report(os, results);
}

} // namespace grover::cli
