#include "psido/report.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "json.hpp"

namespace psido {

ReportFormat parse_report_format(std::string_view s)
{
    if (s == "text")
        return ReportFormat::text;
    if (s == "structured")
        return ReportFormat::structured;
    throw std::invalid_argument(fmt::format("unknown report format '{}' (use text or structured)", s));
}

namespace {

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing)
{
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["fixture"] = r.fixture;
    j["cases_run"] = r.cases_run;
    j["passed"] = r.passed;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
        nlohmann::ordered_json o;
        o["input"] = f.input;
        o["expected"] = f.expected;
        o["got"] = f.got;
        o["witness"] = f.witness;
        failures.push_back(std::move(o));
    }
    j["failures"] = std::move(failures);
    if (include_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    j["seed"] = r.seed;
    j["status"] = std::string(to_string(r.status));
    j["note"] = r.note;
    return j;
}

std::string short_fixture(const std::string& fixture)
{
    const auto cut = fixture.find(" (");
    return cut == std::string::npos ? fixture : fixture.substr(0, cut);
}

} // namespace

std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format,
                           bool include_timing)
{
    if (format == ReportFormat::structured) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r, include_timing));
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (const auto& r : reports) {
        out += fmt::format("suite: {}\nfixture: {}\ncases_run: {}\npassed: {}\n", r.suite, r.fixture,
                           r.cases_run, r.passed);
        if (r.failures.empty())
            out += "failures: none\n";
        else
            out += "failures:\n";
        for (const auto& f : r.failures)
            out += fmt::format("  - input: {}\n    expected: {}\n    got: {}\n    witness: {}\n", f.input,
                               f.expected, f.got, f.witness);
        if (include_timing)
            out += fmt::format("elapsed_ms: {:.3f}\n", r.elapsed_ms);
        out += fmt::format("seed: {}\nstatus: {}\n", r.seed, to_string(r.status));
        if (!r.note.empty())
            out += fmt::format("note: {}\n", r.note);
        out += "\n";
    }
    return out;
}

std::string summary_table(const std::vector<VerificationReport>& reports)
{
    std::string out = fmt::format("{:<17} {:<26} {:<8} {}\n", "suite", "fixture", "status", "passed");
    std::size_t cases = 0;
    for (const auto& r : reports) {
        out += fmt::format("{:<17} {:<26} {:<8} {}/{}\n", r.suite, short_fixture(r.fixture),
                           to_string(r.status), r.passed, r.cases_run);
        cases += r.cases_run;
    }
    out += fmt::format("reports: {}, cases: {}, failures: {}\n", reports.size(), cases,
                       failure_count(reports));
    return out;
}

std::size_t failure_count(const std::vector<VerificationReport>& reports)
{
    std::size_t n = 0;
    for (const auto& r : reports)
        n += r.failures.size();
    return n;
}

} // namespace psido
