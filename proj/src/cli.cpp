#include "fraczeta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <vector>

#include "fraczeta/integral.hpp"
#include "fraczeta/report.hpp"
#include "fraczeta/verify.hpp"
#include "fraczeta/zeta.hpp"

namespace fraczeta::cli {

namespace {

std::string format_complex(Complex z) {
    const std::string im = format_number(z.imag());
    return format_number(z.real()) + " " + (im.front() == '-' ? "" : "+") + im + "i";
}

// Opens --out when given, otherwise forwards to `fallback`.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::binary | std::ios::trunc);
            if (!file_) throw DomainError("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void add_quadrature_flags(CLI::App* cmd, QuadratureConfig& cfg) {
    cmd->add_option("--cutoff", cfg.cutoff_n, "Index where exact piece summation stops")
        ->check(CLI::Range(2L, 1000000000L));
    cmd->add_option("--depth", cfg.ibp_depth, "Integration-by-parts tail corrections (0-4)")
        ->check(CLI::Range(0, 4));
    cmd->add_option("--quad-tol", cfg.target_tol, "Largest acceptable quadrature error bound")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional-part integrals for zeta and eta, and a zero-identity checker",
                 "fraczeta"};
    app.require_subcommand(1);

    std::function<int()> action;

    // eval
    std::string function;
    std::string method = "series";
    double sigma = 0.0, t = 0.0, tol = 1e-12;
    QuadratureConfig eval_cfg;
    auto* eval = app.add_subcommand("eval", "Evaluate zeta(s) or eta(s)");
    eval->add_option("function", function, "zeta or eta")
        ->required()
        ->check(CLI::IsMember({"zeta", "eta"}));
    eval->add_option("--sigma", sigma, "Re(s)")->required();
    eval->add_option("--t", t, "Im(s)")->required();
    eval->add_option("--method", method, "series or integral")
        ->check(CLI::IsMember({"series", "integral"}));
    eval->add_option("--tol", tol, "Series tolerance")->check(CLI::PositiveNumber);
    add_quadrature_flags(eval, eval_cfg);
    eval->callback([&] {
        action = [&]() -> int {
            const Complex s{sigma, t};
            Complex value;
            if (method == "series") {
                value = function == "zeta" ? zeta_from_eta(s, tol) : eta_series(s, tol);
            } else if (function == "zeta") {
                if (s == Complex(1.0, 0.0)) throw SingularParameterError("pole at s=1");
                value = s / (s - 1.0) -
                        s * integral_improper(IntegrandKind::Frac, s, eval_cfg).value;
            } else {
                value = s * integral_improper(IntegrandKind::Kappa, s, eval_cfg).value;
            }
            out << format_complex(value) << '\n';
            return kSuccess;
        };
    });

    // integral
    std::string kind_name = "frac";
    QuadratureConfig int_cfg;
    auto* integral = app.add_subcommand("integral", "Evaluate int_1^inf f(t) t^(-s-1) dt");
    integral->add_option("--kind", kind_name, "frac, shifted or kappa")
        ->check(CLI::IsMember({"frac", "shifted", "kappa"}));
    integral->add_option("--sigma", sigma, "Re(s)")->required();
    integral->add_option("--t", t, "Im(s)")->required();
    add_quadrature_flags(integral, int_cfg);
    integral->callback([&] {
        action = [&]() -> int {
            const IntegralResult r =
                integral_improper(parse_integrand_kind(kind_name), {sigma, t}, int_cfg);
            out << "{\"value_re\":" << format_number(r.value.real())
                << ",\"value_im\":" << format_number(r.value.imag())
                << ",\"tail_bound\":" << format_number(r.tail_bound)
                << ",\"pieces\":" << r.pieces << "}\n";
            return kSuccess;
        };
    });

    // zeros
    double t_from = 10.0, t_to = 50.0, step = 0.05, refine_tol = 1e-9;
    auto* zeros = app.add_subcommand("zeros", "Locate critical-line zeros of zeta");
    zeros->add_option("--from", t_from, "Lower ordinate")->required();
    zeros->add_option("--to", t_to, "Upper ordinate")->required();
    zeros->add_option("--step", step, "Scan grid step");
    zeros->add_option("--refine-tol", refine_tol, "Bisection bracket width");
    zeros->callback([&] {
        action = [&]() -> int {
            for (const auto& z : find_zeros(t_from, t_to, step, refine_tol)) {
                out << "{\"ordinate\":" << format_number(z.ordinate)
                    << ",\"bracket_lo\":" << format_number(z.bracket_lo)
                    << ",\"bracket_hi\":" << format_number(z.bracket_hi)
                    << ",\"eta_residual\":" << format_number(z.eta_residual) << "}\n";
            }
            return kSuccess;
        };
    });

    // verify
    std::string out_path, format_name = "json-lines";
    double pass_floor = kDefaultPassFloor;
    QuadratureConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "Check the zero identity at located zeros");
    verify->add_option("--from", t_from, "Lower ordinate")->required();
    verify->add_option("--to", t_to, "Upper ordinate")->required();
    verify->add_option("--tol", pass_floor, "Residual pass threshold floor")
        ->check(CLI::PositiveNumber);
    verify->add_option("--step", step, "Zero scan grid step");
    verify->add_option("--refine-tol", refine_tol, "Bisection bracket width");
    verify->add_option("--out", out_path, "Output file (default: stdout)");
    verify->add_option("--format", format_name, "json-lines or csv")
        ->check(CLI::IsMember({"json-lines", "csv"}));
    add_quadrature_flags(verify, verify_cfg);
    verify->callback([&] {
        action = [&]() -> int {
            const ReportFormat format = parse_report_format(format_name);
            std::vector<VerificationRecord> records;
            for (const auto& z : find_zeros(t_from, t_to, step, refine_tol)) {
                records.push_back(verify_zero(z, verify_cfg, pass_floor));
            }
            Output sink(out_path, out);
            write_report(sink.stream(), std::span<const VerificationRecord>(records), format);
            const bool all_passed = std::all_of(records.begin(), records.end(),
                                                [](const auto& r) { return r.passed; });
            return all_passed ? kSuccess : kVerificationFailed;
        };
    });

    // residual-scan
    std::vector<double> sigma_list{0.5};
    double t_step = 0.5;
    double scan_from = 0.0, scan_to = 50.0;
    QuadratureConfig scan_cfg;
    auto* scan = app.add_subcommand("residual-scan",
                                    "Measured vs predicted identity residual over a grid");
    scan->add_option("--sigma-list", sigma_list, "Comma-separated Re(s) values")
        ->delimiter(',')
        ->required();
    scan->add_option("--t-from", scan_from, "First Im(s)")->required();
    scan->add_option("--t-to", scan_to, "Last Im(s)")->required();
    scan->add_option("--t-step", t_step, "Im(s) step")->check(CLI::PositiveNumber);
    scan->add_option("--tol", tol, "zeta tolerance")->check(CLI::PositiveNumber);
    scan->add_option("--out", out_path, "Output file (default: stdout)");
    scan->add_option("--format", format_name, "json-lines or csv")
        ->check(CLI::IsMember({"json-lines", "csv"}));
    add_quadrature_flags(scan, scan_cfg);
    scan->callback([&] {
        action = [&]() -> int {
            if (scan_to < scan_from) throw DomainError("residual-scan: --t-to is below --t-from");
            const ReportFormat format = parse_report_format(format_name);
            std::vector<double> ts;
            for (long k = 0;; ++k) {
                const double tk = scan_from + static_cast<double>(k) * t_step;
                if (tk > scan_to + 1e-9 * t_step) break;
                ts.push_back(tk);
            }
            const auto rows = scan_grid(sigma_list, ts, scan_cfg, tol);
            Output sink(out_path, out);
            write_report(sink.stream(), std::span<const ScanRow>(rows), format);
            bool numeric_failure = false, mismatch = false;
            for (const auto& row : rows) {
                if (row.error) {
                    err << "fraczeta: s=" << format_complex(row.s) << ": " << *row.error << '\n';
                    numeric_failure = true;
                } else if (!row.passed) {
                    mismatch = true;
                }
            }
            if (numeric_failure) return kNumericFailure;
            return mismatch ? kVerificationFailed : kSuccess;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        for (double x : {sigma, t, t_from, t_to, scan_from, scan_to}) {
            if (!std::isfinite(x)) throw CLI::ValidationError("numeric flags must be finite");
        }
        return action();
    } catch (const CLI::ValidationError& e) {
        err << "fraczeta: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "fraczeta: " << e.what() << '\n';
        return kNumericFailure;
    }
}

}  // namespace fraczeta::cli
