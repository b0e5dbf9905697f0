#pragma once

// Suite report serialization. Floats are written with 17 significant digits
// so a JSON report parses back to an equal SuiteReport.

#include <filesystem>
#include <string>
#include <string_view>

#include "nrad/suite.hpp"

namespace nrad {

enum class ReportFormat { Json, Csv };

ReportFormat report_format_from_name(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "trial,bound,mode,lambda,r,n,alpha,exponent_p,w_power,rhs,slack,holds";

std::string report_to_json(const SuiteReport& report);
/// Bound rows only; λ-free rows leave the lambda column empty.
std::string report_to_csv(const SuiteReport& report);

SuiteReport report_from_json(const std::string& text);

void emit_report(const SuiteReport& report, ReportFormat format, const std::filesystem::path& path);

}  // namespace nrad
