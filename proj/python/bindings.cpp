// Python bindings for the contest library.  The module mirrors the C++ API
// closely: factory functions build the validated spec/param structs and the
// analysis routines return small result classes or plain floats.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "armsrace/contest.hpp"
#include "armsrace/dynamics.hpp"
#include "armsrace/equilibrium.hpp"
#include "armsrace/families.hpp"
#include "armsrace/multisurface.hpp"
#include "armsrace/params.hpp"
#include "armsrace/ratio.hpp"
#include "armsrace/scenario.hpp"
#include "armsrace/strategic.hpp"
#include "armsrace/subcommands.hpp"

namespace py = pybind11;
using namespace armsrace;

namespace {

py::object cell_to_py(const Cell& c) {
  if (std::holds_alternative<double>(c)) return py::float_(std::get<double>(c));
  if (std::holds_alternative<bool>(c)) return py::bool_(std::get<bool>(c));
  return py::str(std::get<std::string>(c));
}

py::dict table_to_py(const ResultTable& t) {
  py::dict d;
  d["name"] = t.name;
  d["columns"] = t.columns;
  py::list rows;
  for (const auto& row : t.rows) {
    py::list r;
    for (const Cell& c : row) r.append(cell_to_py(c));
    rows.append(r);
  }
  d["rows"] = rows;
  py::dict meta;
  for (const auto& [k, v] : t.metadata) meta[py::str(k)] = v;
  d["metadata"] = meta;
  return d;
}

}  // namespace

PYBIND11_MODULE(armsrace, m) {
  m.doc() = "attacker/defender contest model laboratory";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError",
                                           PyExc_RuntimeError);

  py::class_<AmplificationSpec>(m, "AmplificationSpec")
      .def_static("logarithmic", &AmplificationSpec::logarithmic,
                  py::arg("alpha"))
      .def_static("saturating", &AmplificationSpec::saturating,
                  py::arg("alpha"), py::arg("saturation"))
      .def_readonly("alpha", &AmplificationSpec::alpha);

  py::class_<ErosionSpec>(m, "ErosionSpec")
      .def_static("hyperbolic", &ErosionSpec::hyperbolic, py::arg("delta0"),
                  py::arg("beta"))
      .def_static("power_law", &ErosionSpec::power_law, py::arg("delta0"),
                  py::arg("beta"), py::arg("k"),
                  py::arg("allow_k_above_one") = false)
      .def_static("exponential", &ErosionSpec::exponential, py::arg("delta0"),
                  py::arg("beta"))
      .def_readonly("delta0", &ErosionSpec::delta0)
      .def_readonly("beta", &ErosionSpec::beta)
      .def_readonly("uniqueness_guarantee", &ErosionSpec::uniqueness_guarantee);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<double, AmplificationSpec, ErosionSpec, double, double,
                    double, double, double, double>(),
           py::arg("q0"), py::arg("h"), py::arg("delta"), py::arg("s"),
           py::arg("V"), py::arg("B"), py::arg("c_d"), py::arg("c_a"),
           py::arg("F") = 0.0)
      .def_readonly("q0", &ModelParams::q0)
      .def_readonly("s", &ModelParams::s)
      .def_readonly("V", &ModelParams::V)
      .def_readonly("B", &ModelParams::B)
      .def_readonly("c_d", &ModelParams::c_d)
      .def_readonly("c_a", &ModelParams::c_a)
      .def_readonly("F", &ModelParams::F);

  py::class_<SurfaceConfig>(m, "SurfaceConfig")
      .def(py::init<double, double, double, double>(), py::arg("N"),
           py::arg("rho"), py::arg("gamma"), py::arg("s"))
      .def_readonly("N", &SurfaceConfig::N)
      .def_readonly("rho", &SurfaceConfig::rho)
      .def_readonly("gamma", &SurfaceConfig::gamma)
      .def_readonly("s", &SurfaceConfig::s);

  m.def("eval_h", &eval_h, py::arg("spec"), py::arg("a"));
  m.def("eval_delta", &eval_delta, py::arg("spec"), py::arg("a"));
  m.def("breach_probability", &breach_probability, py::arg("params"),
        py::arg("a"), py::arg("d"), py::arg("s_eff"));
  m.def("adversarial_leverage", &adversarial_leverage, py::arg("params"),
        py::arg("a"));
  m.def("payoff_defender", &payoff_defender, py::arg("params"), py::arg("a"),
        py::arg("d"), py::arg("s_eff"));
  m.def("payoff_attacker", &payoff_attacker, py::arg("params"), py::arg("a"),
        py::arg("d"), py::arg("s_eff"));

  py::class_<RatioReport>(m, "RatioReport")
      .def_readonly("r0", &RatioReport::r0)
      .def_readonly("r_general", &RatioReport::r_general)
      .def_readonly("amplification_component",
                    &RatioReport::amplification_component)
      .def_readonly("erosion_premium", &RatioReport::erosion_premium);

  m.def("r0_single", &r0_single, py::arg("params"));
  m.def("r0_multi", &r0_multi, py::arg("params"), py::arg("config"));
  m.def("r_general", &r_general, py::arg("params"), py::arg("a"), py::arg("d"),
        py::arg("s_eff"));
  m.def("effective_signal", &effective_signal, py::arg("config"));

  py::class_<EquilibriumResult>(m, "EquilibriumResult")
      .def_readonly("d_star", &EquilibriumResult::d_star)
      .def_readonly("a_star", &EquilibriumResult::a_star)
      .def_readonly("q_star", &EquilibriumResult::q_star)
      .def_readonly("r_at_eq", &EquilibriumResult::r_at_eq)
      .def_readonly("interior_defender", &EquilibriumResult::interior_defender)
      .def_readonly("interior_attacker", &EquilibriumResult::interior_attacker)
      .def_readonly("uniqueness_certified",
                    &EquilibriumResult::uniqueness_certified)
      .def_readonly("used_fallback", &EquilibriumResult::used_fallback);

  m.def("defender_best_response", &defender_best_response, py::arg("params"),
        py::arg("a"), py::arg("s_eff"));
  m.def("attacker_best_response", &attacker_best_response, py::arg("params"),
        py::arg("d"), py::arg("s_eff"));
  m.def("solve_equilibrium", &solve_equilibrium, py::arg("params"),
        py::arg("s_eff"));

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("d_path", &Trajectory::d_path)
      .def_readonly("a_path", &Trajectory::a_path)
      .def_readonly("converged", &Trajectory::converged)
      .def_readonly("sup_norm_residual", &Trajectory::sup_norm_residual)
      .def_readonly("divergence_detected", &Trajectory::divergence_detected);

  m.def(
      "simulate_discrete",
      [](const ModelParams& p, double s_eff, double d0, double a0, double eta,
         int max_steps, double tol) {
        return simulate_discrete(p, s_eff, {d0, a0}, eta, max_steps, tol);
      },
      py::arg("params"), py::arg("s_eff"), py::arg("d0"), py::arg("a0"),
      py::arg("eta") = 0.15, py::arg("max_steps") = 50000,
      py::arg("tol") = 1e-8);

  py::class_<MultiSurfaceState>(m, "MultiSurfaceState")
      .def_readonly("q_per_surface", &MultiSurfaceState::q_per_surface)
      .def_readonly("lambda_rate", &MultiSurfaceState::lambda)
      .def_readonly("p_overall", &MultiSurfaceState::p_overall);

  m.def("multi_surface_state", &multi_surface_state, py::arg("params"),
        py::arg("config"), py::arg("a"), py::arg("d"));
  m.def("asymptotic_breach", &asymptotic_breach, py::arg("params"),
        py::arg("a"));

  m.def(
      "parse_scenario",
      [](const std::string& text) {
        const Scenario sc = parse_scenario(text);
        py::dict d;
        d["seed"] = sc.seed;
        d["hash"] = sc.hash;
        d["has_model"] = sc.model.has_value();
        d["has_surfaces"] = sc.surfaces.has_value();
        return d;
      },
      py::arg("text"));

  m.def(
      "run_subcommand",
      [](const std::string& name, const std::string& scenario_text) {
        const Scenario sc = parse_scenario(scenario_text);
        py::list tables;
        for (const ResultTable& t : run_subcommand(name, sc)) {
          tables.append(table_to_py(t));
        }
        return tables;
      },
      py::arg("name"), py::arg("scenario_text"));
}
