#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msy/oracle.hpp"
#include "msy/reference_levels.hpp"
#include "msy/wavefn.hpp"

namespace py = pybind11;
using namespace msy;

PYBIND11_MODULE(pymsy, m) {
    m.doc() = "Dirac bound states of the Mobius-square plus (quasi-)Yukawa potential "
              "with a Coulomb-like tensor term";

    py::enum_<SymmetryLimit>(m, "SymmetryLimit")
        .value("pseudospin", SymmetryLimit::pseudospin)
        .value("spin", SymmetryLimit::spin);
    py::enum_<PotentialChoice>(m, "PotentialChoice")
        .value("first", PotentialChoice::first)
        .value("second", PotentialChoice::second);
    py::enum_<TailForm>(m, "TailForm")
        .value("squared", TailForm::squared)
        .value("linear", TailForm::linear);
    py::enum_<Branch>(m, "Branch").value("plus", Branch::plus).value("minus", Branch::minus);
    py::enum_<BranchPolicy>(m, "BranchPolicy")
        .value("automatic", BranchPolicy::automatic)
        .value("plus", BranchPolicy::plus)
        .value("minus", BranchPolicy::minus);

    py::class_<PotentialParams>(m, "PotentialParams")
        .def(py::init<>())
        .def_readwrite("V0", &PotentialParams::V0)
        .def_readwrite("V1", &PotentialParams::V1)
        .def_readwrite("A", &PotentialParams::A)
        .def_readwrite("B", &PotentialParams::B)
        .def_readwrite("C", &PotentialParams::C)
        .def_readwrite("D", &PotentialParams::D)
        .def_readwrite("alpha", &PotentialParams::alpha)
        .def("validate", &PotentialParams::validate);

    py::class_<SymmetrySpec>(m, "SymmetrySpec")
        .def(py::init<>())
        .def_readwrite("limit", &SymmetrySpec::limit)
        .def_readwrite("choice", &SymmetrySpec::choice)
        .def_readwrite("tail", &SymmetrySpec::tail)
        .def_readwrite("sym_const", &SymmetrySpec::sym_const)
        .def_readwrite("H", &SymmetrySpec::H)
        .def_readwrite("M", &SymmetrySpec::M);

    py::class_<QuantumState>(m, "QuantumState")
        .def(py::init([](int n, int kappa) {
                 QuantumState q{n, kappa};
                 q.validate();
                 return q;
             }),
             py::arg("n"), py::arg("kappa"))
        .def_readwrite("n", &QuantumState::n)
        .def_readwrite("kappa", &QuantumState::kappa)
        .def_property_readonly("l", &QuantumState::l)
        .def_property_readonly("l_tilde", &QuantumState::l_tilde)
        .def_property_readonly("j", &QuantumState::j)
        .def("label", &QuantumState::label)
        .def_static("parse_label", &QuantumState::parse_label)
        .def("__repr__", [](const QuantumState& q) {
            return "QuantumState(n=" + std::to_string(q.n) + ", kappa=" + std::to_string(q.kappa)
                   + ")";
        });

    py::class_<RadialGrid>(m, "RadialGrid")
        .def(py::init<>())
        .def_readwrite("r_min", &RadialGrid::r_min)
        .def_readwrite("r_max", &RadialGrid::r_max)
        .def_readwrite("points", &RadialGrid::points)
        .def("make", &RadialGrid::make);

    m.def("delta_potential", &delta_potential, py::arg("r"), py::arg("params"), py::arg("choice"),
          py::arg("tail") = TailForm::squared);
    m.def("sigma_potential", &sigma_potential, py::arg("r"), py::arg("params"), py::arg("choice"),
          py::arg("tail") = TailForm::squared);
    m.def("tensor_potential", &tensor_potential, py::arg("r"), py::arg("H"));
    m.def("centrifugal_approx", &centrifugal_approx, py::arg("r"), py::arg("alpha"), py::arg("C"),
          py::arg("D"));
    m.def("inverse_r_approx", &inverse_r_approx, py::arg("r"), py::arg("alpha"), py::arg("C"),
          py::arg("D"));

    py::class_<EffectiveCoefficients>(m, "EffectiveCoefficients")
        .def_readonly("quad", &EffectiveCoefficients::quad)
        .def_readonly("lin", &EffectiveCoefficients::lin)
        .def_readonly("cst", &EffectiveCoefficients::cst)
        .def_readonly("eff_energy", &EffectiveCoefficients::eff_energy)
        .def_readonly("trial_E", &EffectiveCoefficients::trial_E);
    m.def("effective_coefficients", &effective_coefficients, py::arg("E"), py::arg("params"),
          py::arg("spec"), py::arg("state"));
    m.def("effective_potential", &effective_potential, py::arg("r"), py::arg("coeffs"),
          py::arg("params"));

    py::class_<BoundState>(m, "BoundState")
        .def_readonly("E", &BoundState::E)
        .def_readonly("state", &BoundState::state)
        .def_readonly("branch", &BoundState::branch)
        .def_readonly("residual_at_E", &BoundState::residual_at_E)
        .def_readonly("degree", &BoundState::degree)
        .def("__repr__", [](const BoundState& b) {
            return "BoundState(" + b.state.label() + ", E=" + std::to_string(b.E) + ")";
        });

    m.def(
        "solve_energy",
        [](const QuantumState& q, const PotentialParams& p, const SymmetrySpec& s,
           BranchPolicy branch) {
            SolveOptions opts;
            opts.branch = branch;
            return solve_energy(q, p, s, opts);
        },
        py::arg("state"), py::arg("params"), py::arg("spec"),
        py::arg("branch") = BranchPolicy::automatic);
    m.def("eigenvalue_residual", &eigenvalue_residual, py::arg("E"), py::arg("state"),
          py::arg("params"), py::arg("spec"), py::arg("branch"));
    m.def("doublet_partner", &doublet_partner, py::arg("state"), py::arg("spec"));
    m.def("deng_fan_map", &deng_fan_map, py::arg("De"), py::arg("b"));
    m.def("yukawa_reduction", &yukawa_reduction, py::arg("params"));
    m.def(
        "coulomb_trend_check",
        [](const PotentialParams& p, const SymmetrySpec& s, const QuantumState& q,
           const std::vector<double>& alphas) {
            return coulomb_trend_check(p, s, q, alphas);
        },
        py::arg("params"), py::arg("spec"), py::arg("state"), py::arg("alpha_sequence"));

    m.def("jacobi", &jacobi, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("x"));
    m.def("jacobi_derivative", &jacobi_derivative, py::arg("n"), py::arg("a"), py::arg("b"),
          py::arg("x"));

    py::class_<WaveSpec>(m, "WaveSpec")
        .def_readonly("exp1", &WaveSpec::exp1)
        .def_readonly("exp2", &WaveSpec::exp2)
        .def_readonly("jacobi_a", &WaveSpec::jacobi_a)
        .def_readonly("jacobi_b", &WaveSpec::jacobi_b)
        .def_readonly("n", &WaveSpec::n)
        .def_readonly("norm", &WaveSpec::norm);
    py::class_<RadialSolution>(m, "RadialSolution")
        .def_readonly("spec", &RadialSolution::spec)
        .def_readonly("r", &RadialSolution::r)
        .def_readonly("upper", &RadialSolution::upper)
        .def_readonly("lower", &RadialSolution::lower);
    m.def("solve_components", &solve_components, py::arg("bound_state"), py::arg("grid"));
    m.def("normalize", &normalize, py::arg("bound_state"), py::arg("grid"));

    py::class_<ShootingConfig>(m, "ShootingConfig")
        .def(py::init<>())
        .def_readwrite("grid", &ShootingConfig::grid)
        .def_readwrite("match_point", &ShootingConfig::match_point)
        .def_readwrite("bracket_lo", &ShootingConfig::bracket_lo)
        .def_readwrite("bracket_hi", &ShootingConfig::bracket_hi)
        .def_readwrite("node_target", &ShootingConfig::node_target)
        .def_readwrite("tol", &ShootingConfig::tol);
    py::class_<ApproximationReport>(m, "ApproximationReport")
        .def_readonly("e_approx", &ApproximationReport::e_approx)
        .def_readonly("e_exact_centrifugal", &ApproximationReport::e_exact_centrifugal)
        .def_readonly("gap", &ApproximationReport::gap);
    m.def("shooting_eigenvalue", &shooting_eigenvalue, py::arg("state"), py::arg("params"),
          py::arg("spec"), py::arg("config") = ShootingConfig{});
    m.def("approximation_error_report", &approximation_error_report, py::arg("state"),
          py::arg("params"), py::arg("spec"), py::arg("config") = ShootingConfig{});

    py::class_<ReferenceLevel>(m, "ReferenceLevel")
        .def_readonly("table", &ReferenceLevel::table)
        .def_readonly("n", &ReferenceLevel::n)
        .def_readonly("kappa", &ReferenceLevel::kappa)
        .def_readonly("H", &ReferenceLevel::H)
        .def_readonly("energy", &ReferenceLevel::energy);
    m.def("reference_levels", [](int table) { return reference_levels(table); }, py::arg("table"));
    m.def("benchmark_params", &benchmark_params, py::arg("limit"));
    m.def("benchmark_spec", &benchmark_spec, py::arg("limit"), py::arg("choice"),
          py::arg("H") = 0.0);
}
