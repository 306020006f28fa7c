#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psido/cli/parser.hpp"
#include "psido/report.hpp"
#include "psido/series.hpp"
#include "psido/verify.hpp"

namespace psido::cli {

struct SessionOptions {
    std::uint64_t seed = 0;
    std::optional<std::size_t> trials;
    PrecisionPolicy precision;
    std::size_t max_order = default_max_order;
    ReportFormat format = ReportFormat::text;
    bool echo = false;
    Exec exec = Exec::parallel;
};

/// Line-oriented command interpreter over one ring and derivation.
class Session {
public:
    Session(std::ostream& out, std::ostream& err, SessionOptions options = {});

    /// Runs one command line. Returns false (after printing the error) when
    /// the command fails or reports a violation.
    bool execute(std::string_view line);

    /// Runs every line; returns the process exit code.
    int run(std::istream& in);

    bool failed() const { return failed_; }
    const std::vector<VerificationReport>& last_reports() const { return reports_; }
    void write_reports(const std::string& path, ReportFormat format) const;

    const RingPtr& ring() const { return ring_; }
    const DerivationPtr& derivation() const { return derivation_; }

    /// Evaluates in the session ring with the session bindings.
    Series evaluate(const Expr& e) const;
    Series evaluate(std::string_view text) const;

private:
    void command(std::string_view line);
    void cmd_ring(std::string_view rest);
    void cmd_derivation(std::string_view rest);
    void cmd_let(std::string_view rest);
    void cmd_eval(std::string_view rest);
    void cmd_radical(std::string_view rest);
    void cmd_annseries(std::string_view rest);
    void cmd_tnilp(std::string_view rest);
    void cmd_verify(std::string_view rest);
    void cmd_precision(std::string_view rest);
    void cmd_report(std::string_view rest);
    void cmd_elements();
    void cmd_help();

    void require_ring() const;
    void set_ring(RingPtr r, DerivationPtr d, std::string fixture_name);
    ElementSet element_list(std::string_view text) const;

    std::ostream& out_;
    std::ostream& err_;
    SessionOptions opt_;
    RingPtr ring_;
    DerivationPtr derivation_;
    std::string fixture_name_;
    std::map<std::string, Series, std::less<>> bindings_;
    std::vector<VerificationReport> reports_;
    bool failed_ = false;
};

/// Drops a `#` comment; `#` directly followed by a digit is an element index.
std::string strip_comment(std::string_view line);

} // namespace psido::cli
