#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "psido/verify.hpp"

namespace psido {

enum class ReportFormat { text, structured };

/// Parses "text" or "structured"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view s);

/// Full reports, fields in declaration order. Structured output is a JSON
/// array with one object per report.
std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format,
                           bool include_timing = true);

/// One line per report (no timings) and a closing total.
std::string summary_table(const std::vector<VerificationReport>& reports);

std::size_t failure_count(const std::vector<VerificationReport>& reports);

} // namespace psido
