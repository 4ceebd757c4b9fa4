#include "fraczeta/report.hpp"

#include <array>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

namespace fraczeta {

namespace {

// One report line; nullopt numbers are failed evaluations.
struct Row {
    std::array<std::optional<double>, 9> numbers;
    bool passed = false;
};

void write_row(std::ostream& os, const Row& row, ReportFormat format) {
    if (format == ReportFormat::JsonLines) {
        os << '{';
        for (std::size_t i = 0; i < row.numbers.size(); ++i) {
            os << '"' << kReportKeys[i] << "\":"
               << (row.numbers[i] ? format_number(*row.numbers[i]) : std::string("null")) << ',';
        }
        os << '"' << kReportKeys[9] << "\":" << (row.passed ? "true" : "false") << "}\n";
    } else {
        for (const auto& number : row.numbers) {
            if (number) os << format_number(*number);
            os << ',';
        }
        os << (row.passed ? "true" : "false") << '\n';
    }
}

void write_header(std::ostream& os, ReportFormat format) {
    if (format != ReportFormat::Csv) return;
    for (std::size_t i = 0; i < std::size(kReportKeys); ++i) {
        os << (i ? "," : "") << kReportKeys[i];
    }
    os << '\n';
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json-lines" || name == "jsonl") return ReportFormat::JsonLines;
    if (name == "csv") return ReportFormat::Csv;
    throw DomainError("unknown report format '" + std::string(name) + "'");
}

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_report(std::ostream& os, std::span<const VerificationRecord> records,
                  ReportFormat format) {
    write_header(os, format);
    for (const auto& rec : records) {
        Row row;
        row.numbers = {rec.rho.real(),    rec.rho.imag(),         rec.lhs.real(),
                       rec.lhs.imag(),    rec.rhs.real(),         rec.rhs.imag(),
                       rec.residual,      rec.predicted_residual, rec.error_budget};
        row.passed = rec.passed;
        write_row(os, row, format);
    }
}

void write_report(std::ostream& os, std::span<const ScanRow> rows, ReportFormat format) {
    write_header(os, format);
    for (const auto& scan : rows) {
        Row row;
        row.numbers[0] = scan.s.real();
        row.numbers[1] = scan.s.imag();
        if (!scan.error) {
            row.numbers[2] = scan.lhs.real();
            row.numbers[3] = scan.lhs.imag();
            row.numbers[4] = scan.rhs.real();
            row.numbers[5] = scan.rhs.imag();
            row.numbers[6] = std::abs(scan.residual_measured);
            row.numbers[7] = std::abs(scan.residual_predicted);
            row.numbers[8] = scan.budget;
        }
        row.passed = scan.passed;
        write_row(os, row, format);
    }
}

}  // namespace fraczeta
