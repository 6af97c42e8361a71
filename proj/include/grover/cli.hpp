#pragma once

#include "grover/engine.hpp"
#include "grover/variant.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace grover::cli {

// Everything a single run needs, as parsed from flags or a JSON config file.
struct ExperimentConfig {
    int n = 0;
    std::string x0 = "random";    // length-n binary string | 0x hex | "random"
    std::string prep = "uniform"; // uniform | random | file:PATH
    std::string variant = "minus";
    std::string iters = "auto";   // auto | non-negative integer | budget:K
    std::uint64_t seed = 0;
    std::string out;              // output path; empty writes to stdout
    std::string format = "csv";   // csv | json
    bool allow_large = false;     // lift the n <= kDefaultMaxQubits ceiling
};

// Dense simulation ceiling: 2^24 amplitudes (256 MiB of doubles) keeps a run
// interactive; --allow-large lifts it to the representation limit.
inline constexpr int kDefaultMaxQubits = 24;
inline constexpr int kHardMaxQubits = 30;

// "random" draws from the seed stream; a length-n string of 0/1 is a binary
// numeral (leftmost digit = highest qubit); anything else must be 0x hex.
std::uint64_t parse_x0(const std::string& text, int n_qubits, std::uint64_t seed);

struct ItersSpec {
    enum class Mode { Auto, Fixed, Budget };
    Mode mode = Mode::Auto;
    int value = 0; // Fixed / Budget only
};
ItersSpec parse_iters(const std::string& text);

Preparation build_preparation(const std::string& prep_text, int n_qubits,
                              std::uint64_t seed);

// Resolves auto/budget to a concrete max_iters. Auto needs a computable
// rotation angle (uniform or explicit preparation) and rejects seeded-random
// preparations with a pointer at budget:K.
int resolve_iters(const ItersSpec& spec, const Preparation& prep, std::uint64_t x0,
                  IterateVariant variant);

// {n, x0_hex, prep, variant, max_iters, seed} with optional out/format.
ExperimentConfig config_from_json(const nlohmann::json& j);

struct RunOutput {
    std::string payload; // CSV trace or JSON envelope, per config.format
    std::string status;  // human summary: measured guess, match, queries
    bool found = false;
    std::uint64_t queries = 0;
    double best_prob = 0.0;
    nlohmann::json envelope; // always populated, whatever the format
};

// The whole run pipeline without filesystem side effects.
RunOutput execute_run(const ExperimentConfig& config);

// Deterministic sweep table; one row per (n, trial), trial streams derived
// from (seed, n, trial).
std::string sweep_csv(int n_min, int n_max, int trials, std::uint64_t seed,
                      IterateVariant variant);

// Command entry points: nonzero on invalid input, I/O failure, or (for
// verify) any failed property. When run's payload goes to stdout (no --out),
// its human summary moves to err_os so stdout stays machine-parseable.
int cmd_run(const ExperimentConfig& config, std::ostream& status_os, std::ostream& err_os);
int cmd_sweep(int n_min, int n_max, int trials, std::uint64_t seed,
              IterateVariant variant, const std::string& out_path, std::ostream& status_os,
              std::ostream& err_os);
int cmd_verify(const std::string& only, std::ostream& os, std::ostream& err_os);

} // namespace grover::cli
