// Python bindings for the ascf engine.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "ascf/config.hpp"
#include "ascf/equilibria.hpp"
#include "ascf/field.hpp"
#include "ascf/integrate.hpp"
#include "ascf/payoffs.hpp"
#include "ascf/sweeps.hpp"
#include "ascf/types.hpp"

namespace py = pybind11;
using namespace ascf;

namespace {

std::string repr_params(const GameParameters& p) {
    char buf[320];
    std::snprintf(buf, sizeof(buf),
                  "GameParameters(I=%g, Rgf=%g, Cg=%g, Cgf=%g, m=%g, e=%g, "
                  "Cm=%g, Caf=%g, Cbf=%g, u=%g, v=%g, w=%g)",
                  p.I, p.Rgf, p.Cg, p.Cgf, p.m, p.e, p.Cm, p.Caf, p.Cbf, p.u,
                  p.v, p.w);
    return buf;
}

std::string repr_state(const StrategyState& s) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "StrategyState(x=%g, y=%g, z=%g)", s.x, s.y,
                  s.z);
    return buf;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Replicator-dynamics engine for the bank / enterprise-A / "
              "enterprise-B supply chain financing game";

    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<IntegrationError>(m, "IntegrationError",
                                             PyExc_RuntimeError);

    m.attr("HYPERBOLICITY_EPS") = kHyperbolicityEps;
    m.attr("CLAMP_TOLERANCE") = kClampTolerance;
    m.attr("DEFAULT_SPEED_TOLERANCE") = kDefaultSpeedTolerance;

    py::class_<GameParameters>(m, "GameParameters")
        .def(py::init([](double I, double Rgf, double Cg, double Cgf, double m_,
                         double e, double Cm, double Caf, double Cbf, double u,
                         double v, double w) {
                 return GameParameters{.I = I,
                                       .Rgf = Rgf,
                                       .Cg = Cg,
                                       .Cgf = Cgf,
                                       .m = m_,
                                       .e = e,
                                       .Cm = Cm,
                                       .Caf = Caf,
                                       .Cbf = Cbf,
                                       .u = u,
                                       .v = v,
                                       .w = w};
             }),
             py::arg("I"), py::arg("Rgf"), py::arg("Cg"), py::arg("Cgf"),
             py::arg("m"), py::arg("e"), py::arg("Cm"), py::arg("Caf"),
             py::arg("Cbf"), py::arg("u"), py::arg("v"), py::arg("w"))
        .def_readwrite("I", &GameParameters::I)
        .def_readwrite("Rgf", &GameParameters::Rgf)
        .def_readwrite("Cg", &GameParameters::Cg)
        .def_readwrite("Cgf", &GameParameters::Cgf)
        .def_readwrite("m", &GameParameters::m)
        .def_readwrite("e", &GameParameters::e)
        .def_readwrite("Cm", &GameParameters::Cm)
        .def_readwrite("Caf", &GameParameters::Caf)
        .def_readwrite("Cbf", &GameParameters::Cbf)
        .def_readwrite("u", &GameParameters::u)
        .def_readwrite("v", &GameParameters::v)
        .def_readwrite("w", &GameParameters::w)
        .def("__repr__", &repr_params);

    py::class_<StrategyState>(m, "StrategyState")
        .def(py::init([](double x, double y, double z) {
                 return StrategyState{x, y, z};
             }),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &StrategyState::x)
        .def_readwrite("y", &StrategyState::y)
        .def_readwrite("z", &StrategyState::z)
        .def("__repr__", &repr_state);

    py::class_<Velocity>(m, "Velocity")
        .def_readonly("fx", &Velocity::fx)
        .def_readonly("fy", &Velocity::fy)
        .def_readonly("fz", &Velocity::fz)
        .def("__repr__", [](const Velocity& v) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "Velocity(fx=%g, fy=%g, fz=%g)",
                          v.fx, v.fy, v.fz);
            return std::string(buf);
        });

    m.def("baseline_parameters", &baseline_parameters,
          "The calibration used by the builtin experiments");
    m.def("validate_parameters", &validate_parameters, py::arg("params"),
          "Checks every range constraint; raises ValidationError listing all "
          "violations");
    m.def("in_unit_cube", &in_unit_cube, py::arg("state"),
          py::arg("tol") = 0.0);

    // --- payoffs -----------------------------------------------------------
    py::class_<OutcomePayoffs>(m, "OutcomePayoffs")
        .def_readonly("bank_improves", &OutcomePayoffs::bank_improves)
        .def_readonly("a_provides", &OutcomePayoffs::a_provides)
        .def_readonly("b_chooses_bank", &OutcomePayoffs::b_chooses_bank)
        .def_readonly("bank", &OutcomePayoffs::bank)
        .def_readonly("a", &OutcomePayoffs::a)
        .def_readonly("b", &OutcomePayoffs::b);

    py::class_<PayoffTable>(m, "PayoffTable")
        .def_readonly("entries", &PayoffTable::entries)
        .def("at", &PayoffTable::at, py::arg("bank_improves"),
             py::arg("a_provides"), py::arg("b_chooses_bank"),
             py::return_value_policy::copy);

    py::class_<ExpectedPayoffs>(m, "ExpectedPayoffs")
        .def_readonly("e11", &ExpectedPayoffs::e11)
        .def_readonly("e12", &ExpectedPayoffs::e12)
        .def_readonly("e_bar_x", &ExpectedPayoffs::e_bar_x)
        .def_readonly("e21", &ExpectedPayoffs::e21)
        .def_readonly("e22", &ExpectedPayoffs::e22)
        .def_readonly("e_bar_y", &ExpectedPayoffs::e_bar_y)
        .def_readonly("e31", &ExpectedPayoffs::e31)
        .def_readonly("e32", &ExpectedPayoffs::e32)
        .def_readonly("e_bar_z", &ExpectedPayoffs::e_bar_z);

    m.def("outcome_payoffs", &outcome_payoffs, py::arg("params"));
    m.def("expected_payoffs", &expected_payoffs, py::arg("params"),
          py::arg("state"));

    // --- field -------------------------------------------------------------
    m.def("replicator_field", &replicator_field, py::arg("params"),
          py::arg("state"));
    m.def("replicator_field_expanded", &replicator_field_expanded,
          py::arg("params"), py::arg("state"));

    py::class_<FieldParameterDerivatives>(m, "FieldParameterDerivatives")
        .def_readonly("dfx_dCg", &FieldParameterDerivatives::dfx_dCg)
        .def_readonly("dfz_dm", &FieldParameterDerivatives::dfz_dm)
        .def_readonly("dfz_de", &FieldParameterDerivatives::dfz_de)
        .def_readonly("dfy_dCm", &FieldParameterDerivatives::dfy_dCm)
        .def_readonly("dfz_dCm", &FieldParameterDerivatives::dfz_dCm)
        .def_readonly("dfy_de", &FieldParameterDerivatives::dfy_de)
        .def_readonly("dfz_dI", &FieldParameterDerivatives::dfz_dI);
    m.def("field_parameter_derivatives", &field_parameter_derivatives,
          py::arg("params"), py::arg("state"));

    // --- equilibria and stability ------------------------------------------
    py::class_<EquilibriumPoint>(m, "EquilibriumPoint")
        .def_readonly("label", &EquilibriumPoint::label)
        .def_readonly("coords", &EquilibriumPoint::coords)
        .def_readonly("defined", &EquilibriumPoint::defined)
        .def_readonly("valid", &EquilibriumPoint::valid)
        .def("__repr__", [](const EquilibriumPoint& p) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "EquilibriumPoint(%s, (%g, %g, %g), defined=%s, "
                          "valid=%s)",
                          p.label.c_str(), p.coords[0], p.coords[1],
                          p.coords[2], p.defined ? "True" : "False",
                          p.valid ? "True" : "False");
            return std::string(buf);
        });

    py::enum_<Stability>(m, "Stability")
        .value("STABLE", Stability::stable)
        .value("UNSTABLE", Stability::unstable)
        .value("SADDLE", Stability::saddle)
        .value("NON_HYPERBOLIC", Stability::non_hyperbolic);

    py::class_<StabilityVerdict>(m, "StabilityVerdict")
        .def_readonly("eigenvalues", &StabilityVerdict::eigenvalues)
        .def_readonly("cls", &StabilityVerdict::cls);

    py::class_<ScenarioCondition>(m, "ScenarioCondition")
        .def_readonly("holds", &ScenarioCondition::holds)
        .def_readonly("op1", &ScenarioCondition::op1)
        .def_readonly("op2", &ScenarioCondition::op2);

    py::class_<ScenarioReport>(m, "ScenarioReport")
        .def_readonly("scenario1", &ScenarioReport::scenario1)
        .def_readonly("scenario2", &ScenarioReport::scenario2)
        .def_readonly("scenario3", &ScenarioReport::scenario3)
        .def_readonly("scenario4", &ScenarioReport::scenario4);

    m.def("enumerate_equilibria", &enumerate_equilibria, py::arg("params"));
    m.def(
        "jacobian",
        [](const GameParameters& p, const std::array<double, 3>& s) {
            return jacobian(p, s).m;
        },
        py::arg("params"), py::arg("point"),
        "Row-major Jacobian of the field at the point (x, y, z)");
    m.def(
        "eigenvalues3",
        [](const std::array<std::array<double, 3>, 3>& rows) {
            Jacobian j;
            j.m = rows;
            return eigenvalues3(j);
        },
        py::arg("matrix"), "Eigenvalues of a real 3x3 matrix");
    m.def("classify", &classify, py::arg("params"), py::arg("point"));
    m.def("scenario_report", &scenario_report, py::arg("params"));

    // --- integration ---------------------------------------------------------
    py::class_<IntegrationConfig>(m, "IntegrationConfig")
        .def(py::init([](double dt, double horizon, int record_every) {
                 return IntegrationConfig{dt, horizon, record_every};
             }),
             py::arg("dt") = 0.01, py::arg("horizon") = 20.0,
             py::arg("record_every") = 10)
        .def_readwrite("dt", &IntegrationConfig::dt)
        .def_readwrite("horizon", &IntegrationConfig::horizon)
        .def_readwrite("record_every", &IntegrationConfig::record_every);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("state", &TrajectorySample::state);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("samples", &Trajectory::samples)
        .def_readonly("params", &Trajectory::params)
        .def_readonly("config", &Trajectory::config)
        .def_readonly("max_boundary_drift", &Trajectory::max_boundary_drift);

    py::class_<NearestEquilibrium>(m, "NearestEquilibrium")
        .def_readonly("label", &NearestEquilibrium::label)
        .def_readonly("distance", &NearestEquilibrium::distance);

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("converged", &ConvergenceReport::converged)
        .def_readonly("terminal_state", &ConvergenceReport::terminal_state)
        .def_readonly("terminal_speed", &ConvergenceReport::terminal_speed)
        .def_readonly("nearest", &ConvergenceReport::nearest);

    m.def("step_count", &step_count, py::arg("config"));
    m.def("integrate", &integrate, py::arg("params"), py::arg("state"),
          py::arg("config") = IntegrationConfig{});
    m.def(
        "detect_convergence",
        [](const Trajectory& traj, double speed_tol,
           const std::vector<EquilibriumPoint>& candidates) {
            return detect_convergence(traj, speed_tol, candidates);
        },
        py::arg("trajectory"), py::arg("speed_tol") = kDefaultSpeedTolerance,
        py::arg("candidates") = std::vector<EquilibriumPoint>{});

    // --- sweeps --------------------------------------------------------------
    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init([](const GameParameters& base, const std::string& parameter,
                         const std::vector<double>& values,
                         const std::vector<StrategyState>& initial_states,
                         const IntegrationConfig& integration) {
                 return SweepSpec{base, parameter, values, initial_states,
                                  integration};
             }),
             py::arg("base"), py::arg("parameter"), py::arg("values"),
             py::arg("initial_states"),
             py::arg("integration") = IntegrationConfig{})
        .def_readwrite("base", &SweepSpec::base)
        .def_readwrite("parameter", &SweepSpec::parameter)
        .def_readwrite("values", &SweepSpec::values)
        .def_readwrite("initial_states", &SweepSpec::initial_states)
        .def_readwrite("integration", &SweepSpec::integration);

    py::class_<SweepCell>(m, "SweepCell")
        .def_readonly("value_index", &SweepCell::value_index)
        .def_readonly("state_index", &SweepCell::state_index)
        .def_readonly("value", &SweepCell::value)
        .def_readonly("initial", &SweepCell::initial)
        .def_readonly("trajectory", &SweepCell::trajectory)
        .def_readonly("convergence", &SweepCell::convergence)
        .def_readonly("mean_x", &SweepCell::mean_x)
        .def_readonly("mean_y", &SweepCell::mean_y)
        .def_readonly("mean_z", &SweepCell::mean_z);

    py::class_<ClaimResult>(m, "ClaimResult")
        .def_readonly("name", &ClaimResult::name)
        .def_readonly("gating", &ClaimResult::gating)
        .def_readonly("holds", &ClaimResult::holds)
        .def_readonly("detail", &ClaimResult::detail);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("spec", &SweepResult::spec)
        .def_readonly("cells", &SweepResult::cells)
        .def_readonly("claims", &SweepResult::claims);

    m.def("with_parameter", &with_parameter, py::arg("base"), py::arg("name"),
          py::arg("value"));
    m.def("default_initial_states", &default_initial_states);
    m.def("builtin_experiments", &builtin_experiments);
    m.def("evaluate_field_claims", &evaluate_field_claims, py::arg("params"));
    m.def("run_sweep", &run_sweep, py::arg("spec"));

    // --- config --------------------------------------------------------------
    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("params", &RunConfig::params)
        .def_readwrite("integration", &RunConfig::integration)
        .def_readwrite("initial_states", &RunConfig::initial_states)
        .def_readwrite("out_dir", &RunConfig::out_dir);

    m.def(
        "parse_config",
        [](const std::string& text) { return parse_config(text); },
        py::arg("text"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
}
