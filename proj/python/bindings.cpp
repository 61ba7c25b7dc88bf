#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgs/analysis.hpp"
#include "qgs/density.hpp"
#include "qgs/pulse.hpp"
#include "qgs/search.hpp"

namespace py = pybind11;

namespace {

using Grid = std::vector<std::vector<qgs::cdouble>>;

Grid to_grid(const qgs::Matrix& m) {
  Grid g(m.dim(), std::vector<qgs::cdouble>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) g[i][j] = m(i, j);
  return g;
}

qgs::Matrix from_grid(const Grid& g) {
  qgs::Matrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].size() != g.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized quantum search simulator core";

  py::class_<qgs::SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("n", &qgs::SearchConfig::n)
      .def_readwrite("tau", &qgs::SearchConfig::tau)
      .def_readwrite("theta", &qgs::SearchConfig::theta)
      .def_readwrite("phi", &qgs::SearchConfig::phi)
      .def_readwrite("iterations", &qgs::SearchConfig::iterations);

  py::class_<qgs::TraceStep>(m, "TraceStep")
      .def_readonly("step", &qgs::TraceStep::step)
      .def_readonly("state", &qgs::TraceStep::state)
      .def_readonly("a_tau", &qgs::TraceStep::a_tau)
      .def_readonly("abs_a_tau", &qgs::TraceStep::abs_a_tau)
      .def_readonly("abs_c", &qgs::TraceStep::abs_c)
      .def_readonly("p_success", &qgs::TraceStep::p_success);

  py::class_<qgs::IterationTrace>(m, "IterationTrace")
      .def_readonly("config", &qgs::IterationTrace::config)
      .def_readonly("steps", &qgs::IterationTrace::steps);

  m.def(
      "search",
      [](int n, std::size_t tau, double theta, double phi, int iterations) {
        qgs::SearchConfig config;
        config.n = n;
        config.tau = tau;
        config.theta = theta;
        config.phi = phi;
        config.iterations = iterations;
        return qgs::grover_generalized(config);
      },
      py::arg("n") = 2, py::arg("tau") = 3, py::arg("theta") = 0.0, py::arg("phi") = 0.0,
      py::arg("iterations") = 10);

  m.def("walsh_hadamard", [](int n) { return to_grid(qgs::walsh_hadamard(n)); }, py::arg("n"));
  m.def("oracle_phase",
        [](int n, std::size_t tau, double phi) { return to_grid(qgs::oracle_phase(n, tau, phi)); },
        py::arg("n"), py::arg("tau"), py::arg("phi"));
  m.def("zero_phase",
        [](int n, double theta) { return to_grid(qgs::zero_phase(n, theta)); },
        py::arg("n"), py::arg("theta"));
  m.def("diffusion_general",
        [](int n, double theta) { return to_grid(qgs::diffusion_general(n, theta)); },
        py::arg("n"), py::arg("theta"));
  m.def("approx_step_size", &qgs::approx_step_size, py::arg("theta"), py::arg("n"));
  m.def("extract_rotation_angle", &qgs::extract_rotation_angle, py::arg("trace"));
  m.def("global_phase_fidelity",
        [](const Grid& u, const Grid& v) {
          return qgs::global_phase_fidelity(from_grid(u), from_grid(v));
        },
        py::arg("u"), py::arg("v"));

  py::enum_<qgs::Spin>(m, "Spin").value("A", qgs::Spin::A).value("B", qgs::Spin::B);
  py::enum_<qgs::Axis>(m, "Axis").value("X", qgs::Axis::X).value("Y", qgs::Axis::Y);

  py::class_<qgs::SpinSystem>(m, "SpinSystem")
      .def(py::init<>())
      .def_readwrite("j_coupling", &qgs::SpinSystem::j_coupling)
      .def_readwrite("larmor_a", &qgs::SpinSystem::larmor_a)
      .def_readwrite("larmor_b", &qgs::SpinSystem::larmor_b)
      .def_readwrite("hard_pulse_duration", &qgs::SpinSystem::hard_pulse_duration);

  py::class_<qgs::Pulse>(m, "Pulse")
      .def_property_readonly("is_delay",
                             [](const qgs::Pulse& p) { return p.kind == qgs::Pulse::Kind::Delay; })
      .def_readonly("spin", &qgs::Pulse::spin)
      .def_readonly("axis", &qgs::Pulse::axis)
      .def_readonly("angle", &qgs::Pulse::angle)
      .def_static("hard", &qgs::Pulse::hard, py::arg("spin"), py::arg("axis"), py::arg("angle"))
      .def_static("delay", &qgs::Pulse::delay, py::arg("alpha"));

  py::class_<qgs::PulseSequence>(m, "PulseSequence")
      .def(py::init<>())
      .def_readonly("pulses", &qgs::PulseSequence::pulses)
      .def("__len__", [](const qgs::PulseSequence& s) { return s.size(); })
      .def("unitary",
           [](const qgs::PulseSequence& s, const qgs::SpinSystem& sys) {
             return to_grid(qgs::sequence_unitary(s, sys));
           },
           py::arg("system") = qgs::SpinSystem{})
      .def("duration",
           [](const qgs::PulseSequence& s, const qgs::SpinSystem& sys) {
             return qgs::sequence_duration(s, sys);
           },
           py::arg("system") = qgs::SpinSystem{})
      .def("to_text",
           [](const qgs::PulseSequence& s, const qgs::SpinSystem& sys) {
             return qgs::sequence_to_text(s, sys);
           },
           py::arg("system") = qgs::SpinSystem{});

  m.def("parse_sequence_text", &qgs::parse_sequence_text, py::arg("text"));
  m.def("compile_rz_gadget", &qgs::compile_rz_gadget, py::arg("target"), py::arg("angle"));
  m.def("compile_oracle", &qgs::compile_oracle, py::arg("phi"), py::arg("tau") = 3);
  m.def("compile_diffusion", &qgs::compile_diffusion, py::arg("theta"));
  m.def("compile_iteration", &qgs::compile_iteration, py::arg("theta"), py::arg("phi"),
        py::arg("tau") = 3);
  m.def("compile_walsh", &qgs::compile_walsh);
  m.def("compile_pseudopure", &qgs::compile_pseudopure);

  m.def("thermal_state",
        [](double epsilon) { return to_grid(qgs::thermal_state(epsilon).m); },
        py::arg("epsilon") = 0.1);
  m.def("relative_error",
        [](const Grid& theory, const Grid& experiment) {
          return qgs::relative_error(qgs::DensityMatrix(from_grid(theory)),
                                     qgs::DensityMatrix(from_grid(experiment)));
        },
        py::arg("theory"), py::arg("experiment"));

  m.def(
      "pulse_path",
      [](double theta, double phi, int iterations, double epsilon) {
        const auto result = qgs::run_pulse_path(theta, phi, iterations, qgs::SpinSystem{}, epsilon);
        py::dict d;
        d["marked_population"] = result.marked_population;
        d["final_rho"] = to_grid(result.final_rho.m);
        d["lambda"] = result.split.lambda;
        d["mu"] = result.split.mu;
        return d;
      },
      py::arg("theta"), py::arg("phi"), py::arg("iterations"), py::arg("epsilon") = 0.1);

  m.def("reference_trace",
        [](const std::string& label) {
          const auto setting = label == "matched" ? qgs::PhaseSetting::Matched
                                                  : qgs::PhaseSetting::Mismatched;
          std::vector<std::pair<double, double>> rows;
          for (const auto& r : qgs::reference_trace(setting))
            rows.emplace_back(r.abs_a_tau, r.abs_c);
          return rows;
        },
        py::arg("label"));
  m.def("reference_hardware_error_percent",
        [](const std::string& label) {
          const auto setting = label == "matched" ? qgs::PhaseSetting::Matched
                                                  : qgs::PhaseSetting::Mismatched;
          const auto& rows = qgs::reference_hardware_error_percent(setting);
          return std::vector<double>(rows.begin(), rows.end());
        },
        py::arg("label"));
  m.def("round_decimals", &qgs::round_decimals, py::arg("x"), py::arg("digits"));
}
