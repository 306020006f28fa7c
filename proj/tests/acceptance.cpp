// Acceptance run: one PASS/FAIL line per criterion.
//
// usage: acceptance <golden-dir>
#include <fmt/format.h>

#include <chrono>
#include <iostream>
#include <map>
#include <set>

#include "golden.hpp"
#include "psido/fixtures.hpp"
#include "psido/report.hpp"
#include "psido/series.hpp"
#include "psido/verify.hpp"

using namespace psido;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void verdict(int n, bool pass, const std::string& what, const std::string& detail)
{
    if (!pass)
        ++failures;
    std::cout << fmt::format("criterion {:>2} [{}] {}: {}", n, pass ? "PASS" : "FAIL", what, detail) << std::endl;
}

struct Tally {
    std::size_t reports = 0;
    std::size_t ran = 0;
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

Tally tally(const std::vector<VerificationReport>& reports)
{
    Tally t;
    for (const auto& r : reports) {
        ++t.reports;
        if (r.status == SuiteStatus::ran)
            ++t.ran;
        t.cases += r.cases_run;
        t.failed += r.failures.size();
        if (!r.failures.empty() && t.first_failure.empty())
            t.first_failure = fmt::format(" first: {} {} {} expected {} got {}", r.suite, r.fixture,
                                          r.failures[0].input, r.failures[0].expected, r.failures[0].got);
    }
    return t;
}

// Σ_{i ≥ 0} (−1)^i δ^i(a) x^(−i−1), built term by term down to x^floor.
Series inverse_relation_oracle(const Fixture& fx, Elem a, std::int64_t floor)
{
    const FiniteRing& R = *fx.ring;
    std::vector<Series::Term> terms;
    Elem di = a;
    for (std::int64_t i = 0; -i - 1 >= floor; ++i) {
        terms.push_back({-i - 1, i % 2 == 0 ? di : R.neg(di)});
        di = (*fx.derivation)(di);
    }
    return from_terms(fx.ring, fx.derivation, terms);
}

// Product of two exact series over a commutative ring with δ = 0, as a plain
// Laurent convolution on degree → coefficient maps.
std::map<std::int64_t, Elem> laurent_product(const FiniteRing& R, const Series& f, const Series& g)
{
    std::map<std::int64_t, Elem> out;
    for (auto [i, a] : f.terms())
        for (auto [j, b] : g.terms()) {
            auto [it, fresh] = out.try_emplace(i + j, R.zero());
            it->second = R.add(it->second, R.mul(a, b));
        }
    std::erase_if(out, [&](const auto& kv) { return kv.second == R.zero(); });
    return out;
}

void criterion_1(const std::vector<Fixture>& catalog)
{
    std::size_t checks = 0;
    double worst = 0;
    std::string bad;
    for (const auto& fx : catalog) {
        const auto t0 = Clock::now();
        const FiniteRing& R = *fx.ring;
        const Series x = x_power(fx.ring, fx.derivation, 1);
        const Series xinv = x_power(fx.ring, fx.derivation, -1);
        for (std::size_t k = 0; k < R.order(); ++k) {
            const auto a = static_cast<Elem>(k);
            const Series ea = embed_scalar(fx.ring, fx.derivation, a);
            const Series lhs = mul(x, ea);
            const Series rhs = from_terms(fx.ring, fx.derivation, {{1, a}, {0, (*fx.derivation)(a)}});
            const bool forward = lhs.exact() && equal_to_floor(lhs, rhs, std::min(lhs.floor(), rhs.floor()));

            const Series inv = mul(xinv, ea);
            const Series oracle = inverse_relation_oracle(fx, a, -24);
            bool backward = (inv.exact() || inv.floor() <= -24) && equal_to_floor(inv, oracle, -24);
            if (fx.derivation->orbit_terminates(a))
                backward = backward && inv.exact() && equal_to_floor(inv, oracle, std::min(inv.floor(), oracle.floor()));
            else
                backward = backward && !inv.exact();
            checks += 2;
            if ((!forward || !backward) && bad.empty())
                bad = fmt::format(" first failure: {} a={} x*a={} x^-1*a={}", fx.name, R.display(a),
                                  to_string(lhs), to_string(inv));
        }
        worst = std::max(worst, seconds_since(t0));
    }
    verdict(1, bad.empty() && worst < 1.0, "relation fidelity",
            fmt::format("{} fixtures, {} exhaustive checks, slowest fixture {:.3f} s (limit 1 s){}", catalog.size(),
                        checks, worst, bad));
}

void criterion_suite(int n, const char* what, const char* suite, const std::vector<Fixture>& catalog,
                     const VerifyOptions& opt, std::size_t min_cases_per_fixture, double limit_s = 0)
{
    const auto t0 = Clock::now();
    const auto reports = run_suite(suite, catalog, opt);
    const double secs = seconds_since(t0);
    const Tally t = tally(reports);
    bool enough = true;
    for (const auto& r : reports)
        if (r.status == SuiteStatus::ran && r.cases_run < min_cases_per_fixture)
            enough = false;
    const bool fast = limit_s <= 0 || secs < limit_s;
    verdict(n, t.failed == 0 && t.ran > 0 && enough && fast, what,
            fmt::format("{} reports ({} ran), {} cases, {} failures, {:.3f} s{}{}", t.reports, t.ran, t.cases,
                        t.failed, secs, limit_s > 0 ? fmt::format(" (limit {} s)", limit_s) : "",
                        t.first_failure));
}

void criterion_6(const std::vector<Fixture>& catalog, const VerifyOptions& opt)
{
    const auto reports = run_suite("series_tnilp", catalog, opt);
    const Tally t = tally(reports);
    std::size_t ideals = 0;
    for (const auto& r : reports)
        ideals += std::stoul(r.note.substr(0, r.note.find(' ')));
    verdict(6, t.failed == 0 && ideals > 0, "nilpotent delta-ideal lift",
            fmt::format("{} nilpotent delta-ideals over {} fixtures, {} cases, {} failures{}", ideals, t.reports,
                        t.cases, t.failed, t.first_failure));
}

void criterion_7(const std::vector<Fixture>& catalog, const VerifyOptions& opt)
{
    const std::set<std::string> required{"z4", "dual-d", "trunc23", "tri-inner", "prod-d"};
    const auto reports = run_suite("main_theorem", catalog, opt);
    const Tally t = tally(reports);
    std::set<std::string> covered;
    for (std::size_t k = 0; k < reports.size(); ++k)
        if (reports[k].status == SuiteStatus::ran && reports[k].cases_run >= opt.trials)
            covered.insert(catalog[k].name);
    const bool all_required = std::includes(covered.begin(), covered.end(), required.begin(), required.end());
    verdict(7, t.failed == 0 && all_required && covered.size() >= 5, "main theorem at desk scale",
            fmt::format("{} fixtures covered (required z4, dual-d, trunc23, tri-inner, prod-d: {}), {} cases, "
                        "{} failures{}",
                        covered.size(), all_required ? "present" : "MISSING", t.cases, t.failed, t.first_failure));
}

void criterion_8(const VerifyOptions& opt)
{
    const auto t0 = Clock::now();
    const VerificationReport r = suite_counterexample(2, 3, 3, opt);
    const double secs = seconds_since(t0);
    verdict(8, r.ok() && r.cases_run > 0 && secs < 5.0, "counterexample growth",
            fmt::format("m=2 n=3: {}/{} checks, {:.3f} s (limit 5 s); {}", r.passed, r.cases_run, secs, r.note));
}

void criterion_9(const std::vector<Fixture>& catalog, const VerifyOptions& opt)
{
    std::size_t fixtures = 0, pairs = 0, bad = 0;
    std::string first;
    for (const auto& fx : catalog) {
        if (!fx.meta.commutative || !fx.meta.zero_derivation || !fx.meta.unital)
            continue;
        ++fixtures;
        const FiniteRing& R = *fx.ring;
        SuiteRng rng(opt.seed, "acceptance/degeneration", fx.name);
        std::vector<Elem> pool(R.order());
        for (std::size_t k = 0; k < pool.size(); ++k)
            pool[k] = static_cast<Elem>(k);
        for (std::size_t t = 0; t < opt.degeneration_trials; ++t) {
            const Series f = random_series(rng, fx.ring, fx.derivation, pool);
            const Series g = random_series(rng, fx.ring, fx.derivation, pool);
            const Series fg = mul(f, g, opt.precision);
            const auto want = laurent_product(R, f, g);
            std::map<std::int64_t, Elem> got;
            for (auto [d, c] : fg.terms())
                got[d] = c;
            ++pairs;
            if (!fg.exact() || got != want) {
                ++bad;
                if (first.empty())
                    first = fmt::format(" first: {} f={} g={} fg={}", fx.name, to_string(f), to_string(g),
                                        to_string(fg));
            }
        }
    }
    const Tally suite = tally(run_suite("degeneration", catalog, opt));
    verdict(9, bad == 0 && fixtures > 0 && pairs >= fixtures * 100 && suite.failed == 0, "zero-derivation degeneration",
            fmt::format("{} commutative fixtures, {} pairs against the independent convolution, {} mismatches; "
                        "library suite {} cases, {} failures{}{}",
                        fixtures, pairs, bad, suite.cases, suite.failed, first, suite.first_failure));
}

void criterion_10(const golden::fs::path& dir)
{
    if (!golden::fs::is_directory(dir)) {
        verdict(10, false, "CLI golden scripts", fmt::format("directory {} not found", dir.string()));
        return;
    }
    const auto scripts = golden::scripts(dir);
    std::size_t matched = 0;
    std::string bad;
    for (const auto& s : scripts) {
        if (const auto m = golden::compare(s)) {
            if (bad.empty())
                bad = fmt::format(" first mismatch: {} line {}", s.filename().string(), m->line);
        } else {
            ++matched;
        }
    }
    verdict(10, scripts.size() >= 10 && matched == scripts.size(), "CLI golden scripts",
            fmt::format("{}/{} transcripts byte-identical modulo timing{}", matched, scripts.size(), bad));
}

} // namespace

int main(int argc, char** argv)
{
    const golden::fs::path golden_dir = argc > 1 ? argv[1] : "tests/golden";
    const auto& catalog = default_catalog();
    VerifyOptions opt; // seed 0, 200 trials, 50 conjugation samples with j ≤ 5, 100 degeneration pairs

    criterion_1(catalog);
    criterion_suite(2, "series ring axioms", "series_axioms", catalog, opt, opt.trials);
    criterion_suite(3, "conjugation identity", "conjugation", catalog, opt,
                    opt.conjugation_trials * (opt.conjugation_max_j + 1));
    criterion_suite(4, "Levitzki dual-oracle agreement", "levitzki", catalog, opt, 1, 10.0);
    criterion_suite(5, "radical collapse", "radical_collapse", catalog, opt, 1);
    criterion_6(catalog, opt);
    criterion_7(catalog, opt);
    criterion_8(opt);
    criterion_9(catalog, opt);
    criterion_10(golden_dir);

    std::cout << fmt::format("{} of 10 criteria passed", 10 - failures) << std::endl;
    return failures == 0 ? 0 : 1;
}
