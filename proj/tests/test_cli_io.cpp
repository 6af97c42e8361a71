#include "grover/cli.hpp"
#include "grover/trace_io.hpp"

#include "grover/engine.hpp"
#include "grover/geometry.hpp"
#include "grover/oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace grover {
namespace {

using nlohmann::json;
using testing::random_test_state;

std::string temp_path(const std::string& name) {
    return ::testing::TempDir() + "groversim_" + name;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

TEST(FormatDouble, ProducesShortestFormsForCommonValues) {
    EXPECT_EQ(format_double(0.0), "0");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-0.25), "-0.25");
}

TEST(FormatDouble, RoundTripsExactly) {
    const double corpus[] = {0.0,
                             -0.0,
                             1.0 / 3.0,
                             std::sqrt(2.0),
                             0.1 + 0.2,
                             -1.5e-300,
                             1e300,
                             5e-324, // smallest subnormal
                             9007199254740993.0,
                             0.49999999999999994};
    for (const double x : corpus) {
        const std::string text = format_double(x);
        const double back = std::strtod(text.c_str(), nullptr);
        EXPECT_EQ(back, x) << text;
        EXPECT_EQ(std::signbit(back), std::signbit(x)) << text;
    }
}

TEST(HexCodec, FormatsLowercaseWithPrefix) {
    EXPECT_EQ(to_hex(0), "0x0");
    EXPECT_EQ(to_hex(255), "0xff");
    EXPECT_EQ(to_hex(0xdeadbeefULL), "0xdeadbeef");
    EXPECT_EQ(to_hex(~std::uint64_t{0}), "0xffffffffffffffff");
}

TEST(HexCodec, ParsesWithAndWithoutPrefix) {
    EXPECT_EQ(parse_hex("0x1f"), 31u);
    EXPECT_EQ(parse_hex("0X2A"), 42u);
    EXPECT_EQ(parse_hex("1F"), 31u);
    EXPECT_EQ(parse_hex("0"), 0u);
    for (const std::uint64_t x : {0ULL, 7ULL, 1ULL << 40, ~0ULL}) {
        EXPECT_EQ(parse_hex(to_hex(x)), x);
    }
}

TEST(HexCodec, RejectsMalformedLiterals) {
    EXPECT_THROW(parse_hex(""), std::invalid_argument);
    EXPECT_THROW(parse_hex("0x"), std::invalid_argument);
    EXPECT_THROW(parse_hex("0xzz"), std::invalid_argument);
    EXPECT_THROW(parse_hex("12g4"), std::invalid_argument);
    EXPECT_THROW(parse_hex("0x1ffffffffffffffff"), std::invalid_argument); // overflow
}

TEST(TraceCsv, WritesHeaderAndOneRowPerRecord) {
    IterationTrace trace;
    trace.records.push_back({0, Amplitude{0.5, 0.0}, 0.25, 0.25, 0, 0.0, 0.0, 0.0});
    trace.records.push_back({1, Amplitude{-1.0, 0.0}, 1.0, 1.0, 1, 0.0, 0.0, 0.0});
    std::ostringstream os;
    write_trace_csv(os, trace);
    const auto lines = split_lines(os.str());
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "iter,overlap_re,overlap_im,success_prob,predicted_prob,queries");
    EXPECT_EQ(lines[1], "0,0.5,0,0.25,0.25,0");
    EXPECT_EQ(lines[2], "1,-1,0,1,1,1");
}

TEST(TraceJson, CarriesAllTopLevelFields) {
    Oracle oracle(3, 6);
    const IterationTrace trace =
        run(oracle, Preparation::uniform(3), IterateVariant::MinusSign, 2, 0);
    const json j = trace_to_json(trace);
    EXPECT_EQ(j.at("n"), 3);
    EXPECT_EQ(j.at("variant"), "minus");
    EXPECT_EQ(j.at("records").size(), 3u);
    EXPECT_EQ(j.at("measured"), to_hex(trace.measured));
    EXPECT_EQ(j.at("total_queries"), 2u);
    EXPECT_FALSE(j.at("zero_overlap_start").get<bool>());
    EXPECT_FALSE(j.at("degenerate_plane").get<bool>());
    const json& rec = j.at("records")[1];
    EXPECT_EQ(rec.at("iter"), 1);
    EXPECT_EQ(rec.at("overlap").size(), 2u);
    EXPECT_EQ(rec.at("plane_coords").size(), 2u);
    EXPECT_TRUE(rec.contains("plane_residual"));
    EXPECT_EQ(rec.at("queries"), 1u);
}

TEST(StateJson, RoundTripsThroughTextExactly) {
    const StateVector state = random_test_state(4, 77);
    const std::string text = state_to_json(state).dump();
    const StateVector back = state_from_json(json::parse(text));
    ASSERT_EQ(back.n_qubits(), state.n_qubits());
    EXPECT_EQ(back.amplitudes(), state.amplitudes());
}

TEST(StateJson, RejectsMalformedPayloads) {
    EXPECT_THROW(state_from_json(json::parse(R"({"n_qubits": 1, "amplitudes": [[1.0]]})")),
                 std::invalid_argument);
    EXPECT_THROW(
        state_from_json(json::parse(R"({"n_qubits": 2, "amplitudes": [[1.0, 0.0]]})")),
        std::invalid_argument); // wrong count
    EXPECT_ANY_THROW(state_from_json(json::parse(R"({"amplitudes": []})")));
}

TEST(UnitaryJson, RoundTripsThroughTextExactly) {
    const DenseUnitary u = DenseUnitary::walsh_hadamard(2);
    const std::string text = unitary_to_json(u).dump();
    const DenseUnitary back = unitary_from_json(json::parse(text));
    ASSERT_EQ(back.dim(), u.dim());
    EXPECT_EQ(back.entries(), u.entries());
}

TEST(OracleSpecJson, RoundTrips) {
    const json j = oracle_spec_to_json(5, 19);
    EXPECT_EQ(j.at("n"), 5);
    EXPECT_EQ(j.at("x0_hex"), "0x13");
    const OracleSpec spec = oracle_spec_from_json(j);
    EXPECT_EQ(spec.n, 5);
    EXPECT_EQ(spec.x0, 19u);
    EXPECT_ANY_THROW(oracle_spec_from_json(json::parse(R"({"n": 5})")));
}

TEST(GeometryReportJson, CarriesModelAnglesAndDeviations) {
    const RotationModel model = RotationModel::from_overlap(0.5);
    const TraceComparison cmp{1e-12, 2e-12, 3e-12};
    const json j = geometry_report_to_json(model, cmp);
    EXPECT_DOUBLE_EQ(j.at("alpha").get<double>(), model.alpha);
    EXPECT_DOUBLE_EQ(j.at("beta").get<double>(), model.beta);
    EXPECT_DOUBLE_EQ(j.at("max_prob_deviation").get<double>(), 1e-12);
    EXPECT_DOUBLE_EQ(j.at("max_coord_deviation").get<double>(), 2e-12);
    EXPECT_DOUBLE_EQ(j.at("max_plane_residual").get<double>(), 3e-12);
}

TEST(ParseX0, BinaryStringsReadMostSignificantBitFirst) {
    EXPECT_EQ(cli::parse_x0("11", 2, 0), 3u);
    EXPECT_EQ(cli::parse_x0("010", 3, 0), 2u);
    EXPECT_EQ(cli::parse_x0("100", 3, 0), 4u);
}

TEST(ParseX0, HexAndRandomForms) {
    EXPECT_EQ(cli::parse_x0("0x1f", 5, 0), 31u);
    const std::uint64_t a = cli::parse_x0("random", 6, 123);
    EXPECT_EQ(cli::parse_x0("random", 6, 123), a); // deterministic in the seed
    EXPECT_LT(a, 64u);
}

TEST(ParseX0, RejectsBadShapesAndOutOfRangeValues) {
    EXPECT_THROW(cli::parse_x0("11", 3, 0), std::invalid_argument);   // wrong length
    EXPECT_THROW(cli::parse_x0("0x10", 4, 0), std::invalid_argument); // = 2^4
    EXPECT_THROW(cli::parse_x0("abc", 3, 0), std::invalid_argument);
    EXPECT_THROW(cli::parse_x0("2", 1, 0), std::invalid_argument);
}

TEST(ParseIters, AcceptsAutoFixedAndBudgetForms) {
    EXPECT_EQ(cli::parse_iters("auto").mode, cli::ItersSpec::Mode::Auto);
    const cli::ItersSpec fixed = cli::parse_iters("7");
    EXPECT_EQ(fixed.mode, cli::ItersSpec::Mode::Fixed);
    EXPECT_EQ(fixed.value, 7);
    EXPECT_EQ(cli::parse_iters("0").value, 0);
    const cli::ItersSpec budget = cli::parse_iters("budget:12");
    EXPECT_EQ(budget.mode, cli::ItersSpec::Mode::Budget);
    EXPECT_EQ(budget.value, 12);
}

TEST(ParseIters, RejectsMalformedSpecs) {
    EXPECT_THROW(cli::parse_iters("-3"), std::invalid_argument);
    EXPECT_THROW(cli::parse_iters("abc"), std::invalid_argument);
    EXPECT_THROW(cli::parse_iters("budget:"), std::invalid_argument);
    EXPECT_THROW(cli::parse_iters("budget:-1"), std::invalid_argument);
    EXPECT_THROW(cli::parse_iters("7.5"), std::invalid_argument);
    EXPECT_THROW(cli::parse_iters(""), std::invalid_argument);
}

TEST(BuildPreparation, UniformAndSeededRandomKinds) {
    EXPECT_EQ(cli::build_preparation("uniform", 3, 0).kind(), Preparation::Kind::Uniform);
    const Preparation a = cli::build_preparation("random", 3, 42);
    const Preparation b = cli::build_preparation("random", 3, 42);
    EXPECT_EQ(a.kind(), Preparation::Kind::SeededRandom);
    EXPECT_EQ(a.seed(), b.seed());
    EXPECT_NE(a.seed(), cli::build_preparation("random", 3, 43).seed());
}

TEST(BuildPreparation, LoadsAnExplicitUnitaryFromFile) {
    const std::string path = temp_path("prep_unitary.json");
    {
        std::ofstream out(path);
        out << unitary_to_json(DenseUnitary::walsh_hadamard(2)).dump();
    }
    const Preparation prep = cli::build_preparation("file:" + path, 2, 0);
    EXPECT_EQ(prep.kind(), Preparation::Kind::ExplicitUnitary);
    // Walsh-Hadamard column 0 is the uniform state.
    const StateVector u0 = prepare_start(prep);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(u0.amplitude(i).real(), 0.5, 1e-15);
    }
    EXPECT_THROW(cli::build_preparation("file:" + path, 3, 0), std::invalid_argument);
    std::remove(path.c_str());
}

TEST(BuildPreparation, RejectsMissingFilesAndUnknownKinds) {
    EXPECT_THROW(cli::build_preparation("file:/no/such/file.json", 2, 0),
                 std::runtime_error);
    EXPECT_THROW(cli::build_preparation("fourier", 2, 0), std::invalid_argument);
}

TEST(ResolveIters, FixedAndBudgetPassThrough) {
    const Preparation prep = Preparation::uniform(4);
    EXPECT_EQ(cli::resolve_iters(cli::parse_iters("9"), prep, 0, IterateVariant::MinusSign),
              9);
    EXPECT_EQ(cli::resolve_iters(cli::parse_iters("budget:12"), prep, 0,
                                 IterateVariant::MinusSign),
              12);
}

TEST(ResolveIters, AutoUsesTheOptimalIterationCount) {
    EXPECT_EQ(cli::resolve_iters(cli::parse_iters("auto"), Preparation::uniform(2), 3,
                                 IterateVariant::MinusSign),
              1);
    EXPECT_EQ(cli::resolve_iters(cli::parse_iters("auto"), Preparation::uniform(10), 0,
                                 IterateVariant::MinusSign),
              optimal_iterations(std::asin(1.0 / 32.0)));
}

TEST(ResolveIters, AutoSquaredHalvesTheStepCount) {
    // One squared application = two minus-sign steps; N = 4 wants one of those.
    const int m = cli::resolve_iters(cli::parse_iters("auto"), Preparation::uniform(4), 7,
                                     IterateVariant::Squared);
    const double alpha = std::asin(0.25);
    int best_m = 0;
    double best_dev = 1e9;
    for (int cand = 0; cand <= 20; ++cand) {
        const double dev = std::abs((4.0 * cand + 1.0) * alpha - std::numbers::pi / 2.0);
        if (dev < best_dev) {
            best_dev = dev;
            best_m = cand;
        }
    }
    EXPECT_EQ(m, best_m);
}

TEST(ResolveIters, AutoRejectsSeededRandomPreparations) {
    const Preparation prep = Preparation::seeded_random(4, 1);
    try {
        cli::resolve_iters(cli::parse_iters("auto"), prep, 0, IterateVariant::MinusSign);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("budget:"), std::string::npos);
    }
}

TEST(ConfigFromJson, ReadsAllFieldsAndAppliesDefaults) {
    const cli::ExperimentConfig c = cli::config_from_json(
        json{{"n", 4}, {"x0_hex", "0x3"}, {"prep", "uniform"}, {"variant", "squared"},
             {"max_iters", 7}, {"seed", 11}, {"out", "o.csv"}, {"format", "json"}});
    EXPECT_EQ(c.n, 4);
    EXPECT_EQ(c.x0, "0x3");
    EXPECT_EQ(c.prep, "uniform");
    EXPECT_EQ(c.variant, "squared");
    EXPECT_EQ(c.iters, "7");
    EXPECT_EQ(c.seed, 11u);
    EXPECT_EQ(c.out, "o.csv");
    EXPECT_EQ(c.format, "json");

    const cli::ExperimentConfig minimal = cli::config_from_json(json{{"n", 3}});
    EXPECT_EQ(minimal.n, 3);
    EXPECT_EQ(minimal.x0, "random");
    EXPECT_EQ(minimal.prep, "uniform");
    EXPECT_EQ(minimal.variant, "minus");
    EXPECT_EQ(minimal.iters, "auto");
    EXPECT_EQ(minimal.seed, 0u);
    EXPECT_EQ(minimal.format, "csv");

    EXPECT_ANY_THROW(cli::config_from_json(json{{"seed", 1}})); // n is required
}

cli::ExperimentConfig small_config() {
    cli::ExperimentConfig config;
    config.n = 2;
    config.x0 = "11";
    config.prep = "uniform";
    config.iters = "auto";
    config.seed = 0;
    return config;
}

TEST(ExecuteRun, FourStateAutoRunFindsTheMarkedString) {
    const cli::RunOutput out = cli::execute_run(small_config());
    EXPECT_TRUE(out.found);
    EXPECT_EQ(out.queries, 1u);
    EXPECT_NEAR(out.best_prob, 1.0, 1e-12);

    const auto lines = split_lines(out.payload);
    ASSERT_EQ(lines.size(), 3u); // header + records k = 0, 1
    EXPECT_EQ(lines[0], "iter,overlap_re,overlap_im,success_prob,predicted_prob,queries");

    EXPECT_EQ(out.envelope.at("config").at("max_iters"), 1);
    EXPECT_EQ(out.envelope.at("config").at("x0_hex"), "0x3");
    EXPECT_EQ(out.envelope.at("summary").at("found"), true);
    EXPECT_EQ(out.envelope.at("summary").at("measured"), "0x3");
    EXPECT_DOUBLE_EQ(out.envelope.at("summary")
                         .at("classical")
                         .at("same_queries_success_prob")
                         .get<double>(),
                     0.25);
    EXPECT_NE(out.status.find("measured=0x3"), std::string::npos);
    EXPECT_NE(out.status.find("matched=yes"), std::string::npos);
}

TEST(ExecuteRun, EnvelopeCarriesTheFourSections) {
    cli::ExperimentConfig config = small_config();
    config.format = "json";
    const cli::RunOutput out = cli::execute_run(config);
    const json j = json::parse(out.payload);
    for (const char* key : {"config", "trace", "geometry_report", "summary"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j.at("trace").at("records").size(), 2u);
    EXPECT_LT(j.at("geometry_report").at("max_prob_deviation").get<double>(), 1e-9);
}

TEST(ExecuteRun, MediumAutoRunUsesTheOptimalIterationCount) {
    cli::ExperimentConfig config;
    config.n = 10;
    config.seed = 1;
    const cli::RunOutput out = cli::execute_run(config);
    EXPECT_EQ(out.queries,
              static_cast<std::uint64_t>(optimal_iterations(std::asin(1.0 / 32.0))));
    EXPECT_GE(out.best_prob, 0.999);
}

TEST(ExecuteRun, SquaredVariantChargesTwoQueriesPerIteration) {
    cli::ExperimentConfig config = small_config();
    config.variant = "squared";
    config.iters = "3";
    const cli::RunOutput out = cli::execute_run(config);
    EXPECT_EQ(out.queries, 6u);
    EXPECT_EQ(out.envelope.at("config").at("variant"), "squared");
}

TEST(ExecuteRun, RandomPrepWithAutoItersIsRejected) {
    cli::ExperimentConfig config = small_config();
    config.prep = "random";
    EXPECT_THROW(cli::execute_run(config), std::invalid_argument);
    config.iters = "budget:6";
    const cli::RunOutput out = cli::execute_run(config); // budget form works
    EXPECT_EQ(out.envelope.at("config").at("max_iters"), 6);
}

TEST(ExecuteRun, IsByteDeterministic) {
    cli::ExperimentConfig config = small_config();
    config.n = 6;
    config.x0 = "random";
    config.prep = "random";
    config.iters = "budget:10";
    config.seed = 9;
    config.format = "json";
    const std::string a = cli::execute_run(config).payload;
    const std::string b = cli::execute_run(config).payload;
    EXPECT_EQ(a, b);
}

TEST(ExecuteRun, ValidatesQubitCountAndFormat) {
    cli::ExperimentConfig config = small_config();
    config.n = 25;
    try {
        cli::execute_run(config);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("--allow-large"), std::string::npos);
    }
    config.n = 0;
    EXPECT_THROW(cli::execute_run(config), std::invalid_argument);
    config = small_config();
    config.format = "xml";
    EXPECT_THROW(cli::execute_run(config), std::invalid_argument);
}

TEST(SweepCsv, ZeroTrialsYieldsJustTheHeader) {
    const std::string csv = cli::sweep_csv(2, 4, 0, 0, IterateVariant::MinusSign);
    EXPECT_EQ(csv, "n,N,trial,x0_hex,iters,queries,best_iter,best_prob,found,"
                   "budget_exceeded,classical_same_queries\n");
}

TEST(SweepCsv, EmitsOneRowPerQubitCountAndTrial) {
    const std::string csv = cli::sweep_csv(2, 3, 2, 7, IterateVariant::MinusSign);
    const auto lines = split_lines(csv);
    ASSERT_EQ(lines.size(), 1u + 2u * 2u);

    // First data row: n=2, N=4, trial=0, one iteration, one query.
    std::istringstream row(lines[1]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    ASSERT_EQ(fields.size(), 11u);
    EXPECT_EQ(fields[0], "2");
    EXPECT_EQ(fields[1], "4");
    EXPECT_EQ(fields[2], "0");
    EXPECT_LT(parse_hex(fields[3]), 4u);
    EXPECT_EQ(fields[4], "1");
    EXPECT_EQ(fields[5], "1");
    EXPECT_EQ(fields[6], "1");
    EXPECT_EQ(fields[8], "1"); // N=4 succeeds with certainty
    EXPECT_EQ(fields[9], "0");
    EXPECT_EQ(fields[10], "0.25");
}

TEST(SweepCsv, IsByteDeterministicInTheSeed) {
    const std::string a = cli::sweep_csv(2, 5, 3, 11, IterateVariant::MinusSign);
    const std::string b = cli::sweep_csv(2, 5, 3, 11, IterateVariant::MinusSign);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, cli::sweep_csv(2, 5, 3, 12, IterateVariant::MinusSign));
}

TEST(SweepCsv, RejectsBadRanges) {
    EXPECT_THROW(cli::sweep_csv(0, 4, 1, 0, IterateVariant::MinusSign),
                 std::invalid_argument);
    EXPECT_THROW(cli::sweep_csv(5, 4, 1, 0, IterateVariant::MinusSign),
                 std::invalid_argument);
    EXPECT_THROW(cli::sweep_csv(2, 25, 1, 0, IterateVariant::MinusSign),
                 std::invalid_argument);
    EXPECT_THROW(cli::sweep_csv(2, 4, -1, 0, IterateVariant::MinusSign),
                 std::invalid_argument);
}

TEST(CmdRun, WritesThePayloadToAFile) {
    const std::string path = temp_path("run_out.csv");
    cli::ExperimentConfig config = small_config();
    config.out = path;
    std::ostringstream status, err;
    ASSERT_EQ(cli::cmd_run(config, status, err), 0);
    EXPECT_EQ(err.str(), "");
    EXPECT_NE(status.str().find("matched=yes"), std::string::npos);

    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), cli::execute_run(config).payload);
    std::remove(path.c_str());
}

TEST(CmdRun, StdoutPayloadMovesStatusToTheErrorStream) {
    cli::ExperimentConfig config = small_config(); // out empty: payload -> stdout
    std::ostringstream status, err;
    ASSERT_EQ(cli::cmd_run(config, status, err), 0);
    EXPECT_EQ(status.str(), cli::execute_run(config).payload);
    EXPECT_NE(err.str().find("matched=yes"), std::string::npos);
}

TEST(CmdRun, ReportsErrorsOnBadConfigAndBadPath) {
    cli::ExperimentConfig config = small_config();
    config.x0 = "banana";
    std::ostringstream status, err;
    EXPECT_EQ(cli::cmd_run(config, status, err), 1);
    EXPECT_NE(err.str().find("error:"), std::string::npos);

    config = small_config();
    config.out = "/no/such/directory/out.csv";
    std::ostringstream status2, err2;
    EXPECT_EQ(cli::cmd_run(config, status2, err2), 1);
    EXPECT_NE(err2.str().find("cannot open"), std::string::npos);
}

TEST(CmdSweep, WritesAndValidates) {
    const std::string path = temp_path("sweep_out.csv");
    std::ostringstream status, err;
    ASSERT_EQ(cli::cmd_sweep(2, 3, 1, 0, IterateVariant::MinusSign, path, status, err), 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), cli::sweep_csv(2, 3, 1, 0, IterateVariant::MinusSign));
    std::remove(path.c_str());

    std::ostringstream status2, err2;
    EXPECT_EQ(cli::cmd_sweep(9, 2, 1, 0, IterateVariant::MinusSign, "", status2, err2), 1);
    EXPECT_NE(err2.str().find("error:"), std::string::npos);
}

TEST(CmdVerify, RunsASingleFilteredPropertyAndRejectsGarbage) {
    std::ostringstream os, err;
    EXPECT_EQ(cli::cmd_verify("rotation-composition", os, err), 0);
    EXPECT_NE(os.str().find("[PASS] rotation-composition"), std::string::npos);

    std::ostringstream os2, err2;
    EXPECT_EQ(cli::cmd_verify("no-such-property", os2, err2), 1);
    EXPECT_NE(err2.str().find("error:"), std::string::npos);
}

} // namespace
} // namespace grover
