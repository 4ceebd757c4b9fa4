#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "fraczeta/cli.hpp"
#include "fraczeta/frac.hpp"
#include "fraczeta/integral.hpp"
#include "fraczeta/verify.hpp"
#include "fraczeta/zeta.hpp"


namespace py = pybind11;
using namespace fraczeta;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fractional-part integrals for zeta/eta and the zero-identity harness";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<SingularParameterError>(m, "SingularParameterError", error.ptr());
    py::register_exception<AccuracyError>(m, "AccuracyError", error.ptr());
    py::register_exception<RefinementError>(m, "RefinementError", error.ptr());

    m.def("frac_real", [](double x) { return frac_real(x).value(); }, py::arg("x"));
    m.def("frac_complex", &frac_complex, py::arg("z"));
    m.def("kappa", &kappa, py::arg("t"));

    py::enum_<IntegrandKind>(m, "IntegrandKind")
        .value("FRAC", IntegrandKind::Frac)
        .value("FRAC_SHIFTED", IntegrandKind::FracShifted)
        .value("KAPPA", IntegrandKind::Kappa);

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init([](long cutoff_n, int ibp_depth, double target_tol) {
                 QuadratureConfig cfg{cutoff_n, ibp_depth, target_tol};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("cutoff_n") = 10000, py::arg("ibp_depth") = 3, py::arg("target_tol") = 1e-8)
        .def_readwrite("cutoff_n", &QuadratureConfig::cutoff_n)
        .def_readwrite("ibp_depth", &QuadratureConfig::ibp_depth)
        .def_readwrite("target_tol", &QuadratureConfig::target_tol);

    py::class_<IntegralResult>(m, "IntegralResult")
        .def_readonly("value", &IntegralResult::value)
        .def_readonly("tail_bound", &IntegralResult::tail_bound)
        .def_readonly("pieces", &IntegralResult::pieces);

    py::class_<ZeroRecord>(m, "ZeroRecord")
        .def(py::init<>())
        .def_readwrite("ordinate", &ZeroRecord::ordinate)
        .def_readwrite("bracket_lo", &ZeroRecord::bracket_lo)
        .def_readwrite("bracket_hi", &ZeroRecord::bracket_hi)
        .def_readwrite("eta_residual", &ZeroRecord::eta_residual)
        .def("__repr__", [](const ZeroRecord& z) {
            return "ZeroRecord(ordinate=" + std::to_string(z.ordinate) + ")";
        });

    py::class_<VerificationRecord>(m, "VerificationRecord")
        .def_readonly("rho", &VerificationRecord::rho)
        .def_readonly("lhs", &VerificationRecord::lhs)
        .def_readonly("rhs", &VerificationRecord::rhs)
        .def_readonly("residual", &VerificationRecord::residual)
        .def_readonly("predicted_residual", &VerificationRecord::predicted_residual)
        .def_readonly("error_budget", &VerificationRecord::error_budget)
        .def_readonly("threshold", &VerificationRecord::threshold)
        .def_readonly("passed", &VerificationRecord::passed);

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("s", &ScanRow::s)
        .def_readonly("lhs", &ScanRow::lhs)
        .def_readonly("rhs", &ScanRow::rhs)
        .def_readonly("residual_measured", &ScanRow::residual_measured)
        .def_readonly("residual_predicted", &ScanRow::residual_predicted)
        .def_readonly("budget", &ScanRow::budget)
        .def_readonly("passed", &ScanRow::passed)
        .def_readonly("error", &ScanRow::error);

    m.def("piece_integral_affine", &piece_integral_affine, py::arg("c0"), py::arg("c1"),
          py::arg("a"), py::arg("b"), py::arg("s"));
    m.def("integral_improper", &integral_improper, py::arg("kind"), py::arg("s"),
          py::arg("cfg") = QuadratureConfig{});
    m.def(
        "tail_estimate",
        [](IntegrandKind kind, Complex s, long n, int depth) {
            const TailEstimate tail = tail_estimate(kind, s, n, depth);
            return py::make_tuple(tail.correction, tail.bound);
        },
        py::arg("kind"), py::arg("s"), py::arg("n"), py::arg("depth"));

    m.def("eta_series", &eta_series, py::arg("s"), py::arg("tol") = 1e-12);
    m.def("zeta_from_eta", &zeta_from_eta, py::arg("s"), py::arg("tol") = 1e-12);
    m.def("hardy_z", &hardy_z, py::arg("t"));
    m.def("find_zeros", &find_zeros, py::arg("t_lo"), py::arg("t_hi"),
          py::arg("grid_step") = 0.05, py::arg("refine_tol") = 1e-9);

    m.def("identity_lhs", &identity_lhs, py::arg("rho"));
    m.def(
        "identity_rhs",
        [](Complex rho, const QuadratureConfig& cfg) {
            const BoundedValue v = identity_rhs(rho, cfg);
            return py::make_tuple(v.value, v.error_bound);
        },
        py::arg("rho"), py::arg("cfg") = QuadratureConfig{});
    m.def("residual_closed_form", &residual_closed_form, py::arg("s"), py::arg("tol") = 1e-12);
    m.def("verify_zero", &verify_zero, py::arg("zero"), py::arg("cfg") = QuadratureConfig{},
          py::arg("pass_floor") = kDefaultPassFloor);
    m.def(
        "scan_grid",
        [](const std::vector<double>& sigmas, const std::vector<double>& ts,
           const QuadratureConfig& cfg, double tol) { return scan_grid(sigmas, ts, cfg, tol); },
        py::arg("sigma_values"), py::arg("t_values"), py::arg("cfg") = QuadratureConfig{},
        py::arg("tol") = 1e-12);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
