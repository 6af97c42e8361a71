#include "grover/cli.hpp"
#include "grover/variant.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Grover amplitude-amplification simulator and verification toolkit"};
    app.require_subcommand(1);

    grover::cli::ExperimentConfig config;
    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Simulate one search run and emit its trace");
    auto* n_opt = run_cmd->add_option("--n", config.n, "Register width in qubits");
    auto* x0_opt = run_cmd->add_option(
        "--x0", config.x0, "Marked string: length-n binary, 0x-prefixed hex, or 'random'");
    auto* prep_opt = run_cmd->add_option("--prep", config.prep,
                                         "Start preparation: uniform | random | file:PATH");
    auto* variant_opt =
        run_cmd->add_option("--variant", config.variant, "Iterate flavor: minus | squared");
    auto* iters_opt =
        run_cmd->add_option("--iters", config.iters, "auto | COUNT | budget:K");
    auto* seed_opt = run_cmd->add_option(
        "--seed", config.seed, "64-bit seed driving the x0/preparation/measurement streams");
    auto* out_opt =
        run_cmd->add_option("--out", config.out, "Output path (stdout when omitted)");
    auto* format_opt = run_cmd->add_option("--format", config.format, "csv | json");
    run_cmd->add_flag("--allow-large", config.allow_large,
                      "Lift the n <= 24 ceiling (hard cap 30; a statevector costs 16 bytes "
                      "per amplitude, so n = 30 needs ~17 GiB)");
    run_cmd->add_option("--config", config_path,
                        "JSON config file {n, x0_hex, prep, variant, max_iters, seed}; "
                        "explicit flags override its values");

    auto* sweep_cmd =
        app.add_subcommand("sweep", "Run seeded trials across register widths; emits CSV");
    int n_min = 2;
    int n_max = 10;
    int trials = 5;
    std::uint64_t sweep_seed = 0;
    std::string sweep_variant = "minus";
    std::string sweep_out;
    sweep_cmd->add_option("--n-min", n_min, "Smallest register width");
    sweep_cmd->add_option("--n-max", n_max, "Largest register width");
    sweep_cmd->add_option("--trials", trials, "Trials per width (0 emits the header only)");
    sweep_cmd->add_option("--seed", sweep_seed, "Seed for the per-trial streams");
    sweep_cmd->add_option("--variant", sweep_variant, "minus | squared");
    sweep_cmd->add_option("--out", sweep_out, "Output path (stdout when omitted)");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check every documented property; nonzero exit on any failure");
    std::string only;
    verify_cmd->add_option("--only", only,
                           "Run only properties whose name contains this substring");

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot open config file: " << config_path << "\n";
                return 1;
            }
            grover::cli::ExperimentConfig base;
            try {
                nlohmann::json j;
                in >> j;
                base = grover::cli::config_from_json(j);
            } catch (const std::exception& e) {
                std::cerr << "error: bad config file " << config_path << ": " << e.what()
                          << "\n";
                return 1;
            }
            if (n_opt->count() == 0) config.n = base.n;
            if (x0_opt->count() == 0) config.x0 = base.x0;
            if (prep_opt->count() == 0) config.prep = base.prep;
            if (variant_opt->count() == 0) config.variant = base.variant;
            if (iters_opt->count() == 0) config.iters = base.iters;
            if (seed_opt->count() == 0) config.seed = base.seed;
            if (out_opt->count() == 0) config.out = base.out;
            if (format_opt->count() == 0) config.format = base.format;
        } else if (n_opt->count() == 0) {
            std::cerr << "error: run needs --n (or --config FILE)\n";
            return 1;
        }
        return grover::cli::cmd_run(config, std::cout, std::cerr);
    }

    if (sweep_cmd->parsed()) {
        grover::IterateVariant variant;
        try {
            variant = grover::parse_variant(sweep_variant);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        return grover::cli::cmd_sweep(n_min, n_max, trials, sweep_seed, variant, sweep_out,
                                      std::cout, std::cerr);
    }

    const int failures = grover::cli::cmd_verify(only, std::cout, std::cerr);
    return failures > 0 ? 1 : 0;
}
