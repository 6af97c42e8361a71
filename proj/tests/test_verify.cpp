#include "grover/verify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace grover {
namespace {

// The iterate with the oracle call dropped: reflects about the start state
// but never marks anything, so the state cannot rotate toward |x0>.
StateVector broken_step(const StateVector& state, Oracle& oracle, const StateVector& u0,
                        IterateVariant variant) {
    (void)oracle;
    (void)variant;
    return negated(reflect_about_state(u0, state));
}

TEST(VerifySuite, AllPropertiesPass) {
    const std::vector<verify::CheckResult> results = verify::run_all("");
    ASSERT_EQ(results.size(), 19u);

    std::set<std::string> names;
    for (const verify::CheckResult& r : results) {
        EXPECT_TRUE(r.passed) << r.name << ": deviation " << r.deviation << " > tolerance "
                              << r.tolerance << " (" << r.detail << ")";
        EXPECT_FALSE(r.name.empty());
        EXPECT_FALSE(r.detail.empty()) << r.name;
        if (r.passed) {
            EXPECT_LE(r.deviation, r.tolerance) << r.name;
        }
        names.insert(r.name);
    }
    EXPECT_EQ(names.size(), results.size()); // no duplicate property names
}

TEST(VerifySuite, FilterSelectsBySubstring) {
    const auto one = verify::run_all("conjugated");
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].name, "conjugated-reflection");

    EXPECT_EQ(verify::run_all("plane").size(), 3u);
    EXPECT_EQ(verify::run_all("reflection").size(), 4u);
    EXPECT_TRUE(verify::run_all("no-such-property").empty());
}

TEST(VerifySuite, ABrokenIterateFailsTheClosedFormCheck) {
    const verify::CheckResult good = verify::check_closed_form_agreement();
    EXPECT_TRUE(good.passed);
    const verify::CheckResult bad = verify::check_closed_form_agreement(&broken_step);
    EXPECT_FALSE(bad.passed);
    EXPECT_GT(bad.deviation, 0.1); // stalls at 1/N instead of growing
}

TEST(PrintReport, OneLinePerResultPlusATally) {
    std::vector<verify::CheckResult> results(2);
    results[0].name = "always-green";
    results[0].passed = true;
    results[0].deviation = 1e-13;
    results[0].tolerance = 1e-10;
    results[0].detail = "synthetic";
    results[1].name = "always-red";
    results[1].passed = false;
    results[1].deviation = 0.5;
    results[1].tolerance = 1e-10;
    results[1].detail = "synthetic";

    std::ostringstream os;
    const int failures = verify::print_report(os, results);
    EXPECT_EQ(failures, 1);
    const std::string text = os.str();
    EXPECT_NE(text.find("[PASS] always-green"), std::string::npos);
    EXPECT_NE(text.find("[FAIL] always-red"), std::string::npos);
    EXPECT_NE(text.find("1/2 properties passed"), std::string::npos);
}

} // namespace
} // namespace grover
