#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "fraczeta/verify.hpp"

namespace fraczeta {

enum class ReportFormat { JsonLines, Csv };

ReportFormat parse_report_format(std::string_view name);

/// Column order shared by both formats.
inline constexpr std::string_view kReportKeys[] = {
    "sigma", "t", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
    "residual", "predicted", "budget", "passed"};

/// %.17g, with -0 printed as 0.
std::string format_number(double x);

void write_report(std::ostream& os, std::span<const VerificationRecord> records,
                  ReportFormat format);

/// Scan rows use the same schema: residual = |rhs - lhs|, predicted =
/// |-(2^s - 1) zeta(s)|. Failed points carry null (JSON) or empty (CSV) numbers.
void write_report(std::ostream& os, std::span<const ScanRow> rows, ReportFormat format);

}  // namespace fraczeta
