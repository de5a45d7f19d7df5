#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plepair/config.hpp"
#include "plepair/couplings.hpp"
#include "plepair/errors.hpp"
#include "plepair/geometry.hpp"
#include "plepair/io.hpp"
#include "plepair/master_equation.hpp"
#include "plepair/spectra.hpp"
#include "plepair/steady_state.hpp"

namespace py = pybind11;
using namespace plepair;

PYBIND11_MODULE(_plepair, m) {
  m.doc() = "Steady-state photoluminescence-excitation spectra of a "
            "dipole-dipole coupled two-emitter system";

  const auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<GeometryError>(m, "GeometryError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<ConfigError>(m, "ConfigError", base);
  py::register_exception<DegenerateSteadyState>(m, "DegenerateSteadyStateError", base);
  py::register_exception<SingularSolve>(m, "SingularSolveError", base);
  py::register_exception<NotConverged>(m, "NotConvergedError", base);
  py::register_exception<SolverError>(m, "SolverError", base);

  py::class_<GeometryConfig>(m, "GeometryConfig")
      .def(py::init([](double xi, double theta, double phi, double r12_lambda,
                       double psi, std::optional<double> r_detector_lambda) {
             GeometryConfig cfg{xi, theta, phi, psi, r12_lambda, r_detector_lambda};
             cfg.validate();
             return cfg;
           }),
           py::arg("xi"), py::arg("theta"), py::arg("phi"), py::arg("r12_lambda"),
           py::arg("psi") = pi / 2, py::arg("r_detector_lambda") = py::none())
      .def_readwrite("xi", &GeometryConfig::xi)
      .def_readwrite("theta", &GeometryConfig::theta)
      .def_readwrite("phi", &GeometryConfig::phi)
      .def_readwrite("psi", &GeometryConfig::psi)
      .def_readwrite("r12_lambda", &GeometryConfig::r12_lambda)
      .def_readwrite("r_detector_lambda", &GeometryConfig::r_detector_lambda)
      .def("validate", &GeometryConfig::validate);

  py::class_<GeometryDerived>(m, "GeometryDerived")
      .def_readonly("n_k", &GeometryDerived::n_k)
      .def_readonly("n_d", &GeometryDerived::n_d)
      .def_readonly("n_obs", &GeometryDerived::n_obs)
      .def_readonly("beta", &GeometryDerived::beta)
      .def_readonly("laser_phase_delta", &GeometryDerived::laser_phase_delta)
      .def_readonly("phi_12", &GeometryDerived::phi_12);

  py::class_<PairParams>(m, "PairParams")
      .def(py::init([](double gamma1, double mu, std::optional<double> gamma2,
                       double delta_omega, double rabi1, std::optional<double> rabi2,
                       double detuning) {
             PairParams p{gamma1, mu, gamma2, delta_omega, rabi1, rabi2, detuning};
             p.validate();
             return p;
           }),
           py::arg("gamma1") = 1.0, py::arg("mu") = 1.0, py::arg("gamma2") = py::none(),
           py::arg("delta_omega") = 0.0, py::arg("rabi1") = 0.0,
           py::arg("rabi2") = py::none(), py::arg("detuning") = 0.0)
      .def_readwrite("gamma1", &PairParams::gamma1)
      .def_readwrite("mu", &PairParams::mu)
      .def_readwrite("gamma2_override", &PairParams::gamma2_override)
      .def_readwrite("delta_omega", &PairParams::delta_omega)
      .def_readwrite("rabi1", &PairParams::rabi1)
      .def_readwrite("rabi2_override", &PairParams::rabi2_override)
      .def_readwrite("detuning", &PairParams::detuning)
      .def("gamma2", &PairParams::gamma2)
      .def("rabi2", &PairParams::rabi2)
      .def("delta1", &PairParams::delta1)
      .def("delta2", &PairParams::delta2);

  py::class_<Couplings>(m, "Couplings")
      .def(py::init<>())
      .def_readwrite("gamma12", &Couplings::gamma12)
      .def_readwrite("omega12", &Couplings::omega12)
      .def_readwrite("drive1", &Couplings::drive1)
      .def_readwrite("drive2", &Couplings::drive2);

  py::class_<Liouvillian>(m, "Liouvillian")
      .def_readonly("matrix", &Liouvillian::matrix)
      .def_readonly("params", &Liouvillian::params)
      .def_readonly("couplings", &Liouvillian::couplings);

  py::class_<IntensityFactors>(m, "IntensityFactors")
      .def_readwrite("i11", &IntensityFactors::i11)
      .def_readwrite("i22", &IntensityFactors::i22)
      .def_readwrite("i12", &IntensityFactors::i12)
      .def_readwrite("alpha", &IntensityFactors::alpha);

  py::enum_<PeakKind>(m, "PeakKind")
      .value("maximum", PeakKind::maximum)
      .value("minimum", PeakKind::minimum);

  py::class_<Peak>(m, "Peak")
      .def_readonly("position", &Peak::position)
      .def_readonly("height", &Peak::height)
      .def_readonly("kind", &Peak::kind)
      .def("__repr__", [](const Peak& p) {
        return "Peak(" + format_double(p.position) + ", " + format_double(p.height) +
               (p.kind == PeakKind::maximum ? ", maximum)" : ", minimum)");
      });

  py::class_<PleSpectrum>(m, "PleSpectrum")
      .def_readonly("detuning", &PleSpectrum::detuning)
      .def_readonly("intensity", &PleSpectrum::intensity)
      .def_readonly("peaks", &PleSpectrum::peaks);

  py::class_<PolarizationScan>(m, "PolarizationScan")
      .def_readonly("theta", &PolarizationScan::theta)
      .def_readonly("detuning", &PolarizationScan::detuning)
      .def_readonly("intensity", &PolarizationScan::intensity)
      .def_readonly("peaks", &PolarizationScan::peaks)
      .def_readonly("trail", &PolarizationScan::trail);

  m.def("derive_geometry", &derive_geometry, py::arg("config"));
  m.def("sin2_beta", &sin2_beta, py::arg("derived"));
  m.def("gamma_12", &gamma_12, py::arg("params"), py::arg("x"), py::arg("theta"));
  m.def("omega_12", &omega_12, py::arg("params"), py::arg("x"), py::arg("theta"));
  m.def("green_tensor", &green_tensor, py::arg("r_lambda"), py::arg("k") = k0_lambda);
  m.def("pair_coupling_from_green", &pair_coupling_from_green, py::arg("params"),
        py::arg("r_lambda"), py::arg("dipole_dir"));
  m.def("drive_amplitudes", &drive_amplitudes, py::arg("params"), py::arg("derived"));
  m.def("make_couplings",
        py::overload_cast<const PairParams&, const GeometryConfig&>(&make_couplings),
        py::arg("params"), py::arg("geometry"));
  m.def("build_liouvillian", &build_liouvillian, py::arg("params"), py::arg("couplings"));
  m.def("apply_liouvillian", &apply_liouvillian, py::arg("liouvillian"), py::arg("rho"));
  m.def("to_collective", &to_collective, py::arg("rho"));
  m.def("collective_transform", &collective_transform,
        py::return_value_policy::reference);
  m.def("ground_state", &ground_state);
  m.def("solve_steady", &solve_steady, py::arg("liouvillian"));
  m.def(
      "evolve_to_steady",
      [](const Liouvillian& liou, std::optional<Matrix4cd> rho0, double t_max, double dt) {
        return evolve_to_steady(liou, rho0 ? *rho0 : ground_state(), t_max, dt);
      },
      py::arg("liouvillian"), py::arg("rho0") = py::none(), py::arg("t_max") = 200.0,
      py::arg("dt") = 1e-3);
  m.def("steady_residual", &steady_residual, py::arg("liouvillian"), py::arg("rho"));
  m.def("make_intensity_factors", &make_intensity_factors, py::arg("params"),
        py::arg("geometry"), py::arg("derived"),
        py::arg("omega0_over_gamma1") = py::none());
  m.def("total_intensity", &total_intensity, py::arg("rho_collective"),
        py::arg("factors"));
  m.def("find_peaks",
        py::overload_cast<const std::vector<double>&, const std::vector<double>&, double>(
            &find_peaks),
        py::arg("x"), py::arg("y"), py::arg("threshold_frac") = 1e-6);
  m.def("ple_scan", &ple_scan, py::arg("params"), py::arg("geometry"),
        py::arg("detuning_grid"), py::arg("omega0_over_gamma1") = py::none(),
        py::call_guard<py::gil_scoped_release>());
  m.def("polarization_scan", &polarization_scan, py::arg("params"), py::arg("geometry"),
        py::arg("theta_grid"), py::arg("detuning_grid"),
        py::arg("omega0_over_gamma1") = py::none(),
        py::call_guard<py::gil_scoped_release>());
  m.def("brightest_side_peak", &brightest_side_peak, py::arg("peaks"),
        py::arg("exclusion") = 0.5);
  m.def("linspace", &linspace, py::arg("a"), py::arg("b"), py::arg("n"));

  py::class_<SimConfig>(m, "SimConfig")
      .def_readonly("params", &SimConfig::params)
      .def_readonly("geometry", &SimConfig::geometry)
      .def_readonly("omega0_over_gamma1", &SimConfig::omega0_over_gamma1)
      .def_readonly("t_max", &SimConfig::t_max)
      .def_readonly("dt", &SimConfig::dt)
      .def("detuning_grid", &SimConfig::detuning_grid)
      .def("theta_grid", &SimConfig::theta_grid);
  m.def("load_config", &load_config, py::arg("path"));
  m.def("parse_config", &parse_config, py::arg("json_text"));

  m.attr("k0_lambda") = k0_lambda;
  m.attr("__version__") = "0.1.0";
}
