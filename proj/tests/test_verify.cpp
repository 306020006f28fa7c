#include <doctest.h>

#include <json.hpp>

#include "psido/fixtures.hpp"
#include "psido/report.hpp"
#include "psido/verify.hpp"

using namespace psido;

namespace {

std::vector<Fixture> pick(std::initializer_list<const char*> names)
{
    std::vector<Fixture> out;
    for (const char* n : names)
        out.push_back(*catalog_fixture(n));
    return out;
}

} // namespace

TEST_CASE("suite RNG is deterministic per (seed, suite, fixture)")
{
    SuiteRng a(0, "relations", "z4"), b(0, "relations", "z4"), c(0, "relations", "z8"), d(1, "relations", "z4");
    bool differs_c = false, differs_d = false;
    for (int k = 0; k < 64; ++k) {
        const auto x = a.below(1000);
        CHECK(x == b.below(1000));
        CHECK(x < 1000);
        differs_c |= x != c.below(1000);
        differs_d |= x != d.below(1000);
    }
    CHECK(differs_c);
    CHECK(differs_d);
    for (int k = 0; k < 100; ++k) {
        const auto v = a.between(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("random series shape")
{
    const Fixture fx = *catalog_fixture("trunc23");
    SuiteRng rng(7, "shape", fx.name);
    std::vector<Elem> pool(fx.ring->order());
    for (std::size_t k = 0; k < pool.size(); ++k)
        pool[k] = static_cast<Elem>(k);
    for (int k = 0; k < 200; ++k) {
        const Series f = random_series(rng, fx.ring, fx.derivation, pool);
        CHECK(f.exact());
        if (f.is_zero())
            continue;
        CHECK(f.top() <= 3);
        CHECK(f.top() >= -3);
        CHECK(f.top() - f.floor() < 6);
    }
}

TEST_CASE("term list")
{
    const Fixture fx = *catalog_fixture("z4");
    const Series f = from_terms(fx.ring, fx.derivation, {{2, 3}, {0, 1}});
    CHECK(term_list(f) == "[(2, #3), (0, #1)]");
    const Series g = add(f, unknown_below(fx.ring, fx.derivation, -2));
    CHECK(term_list(g) == "[(2, #3), (0, #1)] floor -1");
}

TEST_CASE("hypothesis gates produce skips")
{
    const auto reports = run_suite("delta_compat", pick({"dual-d", "dual-euler"}), {});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].status == SuiteStatus::skipped);
    CHECK(reports[0].cases_run == 0);
    CHECK_FALSE(reports[0].note.empty());
    CHECK(reports[0].ok());
    CHECK(reports[1].status == SuiteStatus::ran);
    CHECK(reports[1].cases_run > 0);
    CHECK(reports[1].passed == reports[1].cases_run);
}

TEST_CASE("reports are reproducible and exec-independent")
{
    VerifyOptions opt;
    opt.trials = 20;
    opt.conjugation_trials = 5;
    opt.degeneration_trials = 10;
    const auto catalog = pick({"z4", "dual-d", "cube-euler", "tri-inner"});
    const auto first = run_all(catalog, opt);
    const auto again = run_all(catalog, opt);
    opt.exec = Exec::serial;
    const auto serial = run_all(catalog, opt);
    CHECK(render_reports(first, ReportFormat::text, false) == render_reports(again, ReportFormat::text, false));
    CHECK(render_reports(first, ReportFormat::text, false) == render_reports(serial, ReportFormat::text, false));
    CHECK(failure_count(first) == 0);

    opt.seed = 1;
    const auto reseeded = run_all(catalog, opt);
    CHECK(reseeded.size() == first.size());
    CHECK(failure_count(reseeded) == 0);
}

TEST_CASE("structured reports")
{
    const auto reports = run_suite("relations", pick({"z4"}), {});
    const auto j = nlohmann::ordered_json::parse(render_reports(reports, ReportFormat::structured));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    const auto& r = j[0];
    std::vector<std::string> keys;
    for (auto it = r.begin(); it != r.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"suite", "fixture", "cases_run", "passed", "failures", "elapsed_ms",
                                           "seed", "status", "note"});
    CHECK(r["suite"] == "relations");
    CHECK(r["cases_run"] == 12);
    CHECK(r["failures"].empty());
    CHECK(parse_report_format("structured") == ReportFormat::structured);
    CHECK_THROWS_AS(parse_report_format("yaml"), std::invalid_argument);
}

TEST_CASE("failures are counted and rendered")
{
    VerificationReport rep;
    rep.suite = "demo";
    rep.fixture = "z4";
    rep.record(true);
    rep.record(false, {"a=#1", "0", "#1", "cycle #1 #1"});
    CHECK(rep.cases_run == 2);
    CHECK(rep.passed == 1);
    CHECK_FALSE(rep.ok());
    CHECK(failure_count({rep}) == 1);
    const std::string text = render_reports({rep}, ReportFormat::text, false);
    CHECK(text.find("cycle #1 #1") != std::string::npos);
    CHECK(summary_table({rep}).find("failures: 1") != std::string::npos);
}

TEST_CASE("counterexample suite")
{
    const auto rep = suite_counterexample(2, 3, 3, {});
    CHECK(rep.ok());
    CHECK(rep.cases_run > 0);
    CHECK(run_suite("counterexample", pick({"z4"}), {}).size() == 3);
    CHECK(run_suite("counterexample", {}, {}).empty());
    CHECK_THROWS(run_suite("no-such-suite", pick({"z4"}), {}));
}
