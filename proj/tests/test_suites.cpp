#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "traintrack/twocells.hpp"

using namespace traintrack;
using twocells::Report;

namespace {

const ColourSet kColours(std::vector<std::string>{"a", "b", "c"});

Report run(const std::string& name, std::size_t budget) {
    return twocells::run_axiom_suite(name, budget, 12345, kColours);
}

void expect_clean(const Report& report, std::size_t min_instances) {
    CHECK(report.instances >= min_instances);
    for (const twocells::Failure& failure : report.failures)
        MESSAGE(failure.instance, "\n  lhs: ", failure.lhs, "\n  rhs: ", failure.rhs);
    CHECK(report.passed());
}

} // namespace

TEST_CASE("suite registry") {
    std::vector<std::string> names = twocells::axiom_suite_names();
    CHECK(names.size() == 10);
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK_THROWS_AS(run("no_such_suite", 1), TrainTrackError);
}

TEST_CASE("triangle_left") {
    Report r = run("triangle_left", 2);
    CHECK(r.check == "triangle_left");
    expect_clean(r, 216 + 2);
}

TEST_CASE("triangle_right") { expect_clean(run("triangle_right", 2), 216 + 2); }

TEST_CASE("pentagon_A") {
    Report r = run("pentagon_A", 1);
    CHECK(r.instances == 7); // five edge boundary checks plus two loop comparisons
    expect_clean(r, 7);
}

TEST_CASE("interchange") { expect_clean(run("interchange", 12), 12 + 6); }

TEST_CASE("naturality_conjugation") { expect_clean(run("naturality_conjugation", 10), 20); }

TEST_CASE("cocycle") { expect_clean(run("cocycle", 10), 10); }

TEST_CASE("confluence") { expect_clean(run("confluence", 15), 15); }

TEST_CASE("weak_unit") { expect_clean(run("weak_unit", 10), 6 + 10 + 2); }

TEST_CASE("contraction") { expect_clean(run("contraction", 25), 25 + 4); }

TEST_CASE("all merges every suite with prefixed instances") {
    Report r = run("all", 2);
    CHECK(r.check == "all");
    // Same seed and budget per sub-suite, so the totals must agree exactly.
    std::size_t sum = 0;
    for (const std::string& name : twocells::axiom_suite_names()) {
        if (name == "all") continue;
        sum += run(name, 2).instances;
    }
    CHECK(r.instances == sum);
    expect_clean(r, sum);
}

TEST_CASE("reports count failures honestly") {
    // Identical seeds give identical reports.
    Report r1 = run("cocycle", 4);
    Report r2 = run("cocycle", 4);
    CHECK(r1.instances == r2.instances);
    CHECK(r1.failures.size() == r2.failures.size());
}
