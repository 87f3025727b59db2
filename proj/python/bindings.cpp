#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "n2s/dynamics.hpp"
#include "n2s/errors.hpp"
#include "n2s/matterwave.hpp"
#include "n2s/scenario.hpp"
#include "n2s/schrodinger.hpp"
#include "n2s/verify.hpp"
#include "n2s/wavefield.hpp"

namespace py = pybind11;
using namespace n2s;

PYBIND11_MODULE(_n2s, m) {
    m.doc() = "Newtonian-to-wave-mechanics verification kernels";

    py::register_exception<OutOfDomainError>(m, "OutOfDomainError");
    py::register_exception<DomainTooSmallError>(m, "DomainTooSmallError");
    py::register_exception<NormalizationError>(m, "NormalizationError");
    py::register_exception<SolverError>(m, "SolverError");

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("dot", &Vec3::dot)
        .def("norm", &Vec3::norm);

    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<double, double, int>(), py::arg("x_min"), py::arg("x_max"), py::arg("n"))
        .def_readonly("x_min", &Grid1D::x_min)
        .def_readonly("x_max", &Grid1D::x_max)
        .def_readonly("n", &Grid1D::n)
        .def_readonly("h", &Grid1D::h)
        .def("node", &Grid1D::node);

    py::class_<WaveFunction>(m, "WaveFunction")
        .def(py::init<const Grid1D&, std::vector<Complex>>())
        .def_readonly("grid", &WaveFunction::grid)
        .def_readonly("values", &WaveFunction::values)
        .def("norm", &WaveFunction::norm)
        .def("normalized", &WaveFunction::normalized);
    m.def("inner_product", &inner_product);

    // dynamics
    py::class_<dynamics::ParticleState>(m, "ParticleState")
        .def(py::init<double, double, double, double>(), py::arg("position"),
             py::arg("momentum"), py::arg("mass") = 1.0, py::arg("time") = 0.0)
        .def_readwrite("position", &dynamics::ParticleState::position)
        .def_readwrite("momentum", &dynamics::ParticleState::momentum)
        .def_readwrite("mass", &dynamics::ParticleState::mass)
        .def_readwrite("time", &dynamics::ParticleState::time)
        .def("velocity", &dynamics::ParticleState::velocity);

    py::class_<dynamics::Potential>(m, "Potential")
        .def_static("free_space", &dynamics::Potential::free_space)
        .def_static("harmonic", &dynamics::Potential::harmonic, py::arg("stiffness"))
        .def_static("linear", &dynamics::Potential::linear, py::arg("slope"))
        .def_static("quartic", &dynamics::Potential::quartic, py::arg("coefficient"))
        .def_static("tabulated", &dynamics::Potential::tabulated, py::arg("grid"),
                    py::arg("values"))
        .def("value", &dynamics::Potential::value)
        .def("gradient", &dynamics::Potential::gradient);

    py::class_<dynamics::Trajectory>(m, "Trajectory")
        .def_readonly("states", &dynamics::Trajectory::states)
        .def_readonly("dt", &dynamics::Trajectory::dt)
        .def("at_time", &dynamics::Trajectory::at_time);

    m.def("force_at", &dynamics::force_at);
    m.def("verlet_step", &dynamics::verlet_step);
    m.def("integrate", &dynamics::integrate, py::arg("state"), py::arg("potential"),
          py::arg("dt"), py::arg("steps"));
    m.def("total_energy", &dynamics::total_energy);

    // matterwave
    py::class_<matterwave::MatterWaveFrame>(m, "MatterWaveFrame")
        .def(py::init([](double alpha, const Vec3& p0, double mass, double volume) {
                 matterwave::MatterWaveFrame f{alpha, p0, mass, volume};
                 f.validate();
                 return f;
             }),
             py::arg("alpha") = 1.0, py::arg("p0") = Vec3{1.0, 0.0, 0.0},
             py::arg("mass") = 1.0, py::arg("volume") = 1.0)
        .def_readwrite("alpha", &matterwave::MatterWaveFrame::alpha)
        .def_readwrite("p0", &matterwave::MatterWaveFrame::p0)
        .def_readwrite("mass", &matterwave::MatterWaveFrame::mass)
        .def_readwrite("volume", &matterwave::MatterWaveFrame::volume)
        .def("momentum_magnitude", &matterwave::MatterWaveFrame::momentum_magnitude)
        .def("wavenumber", &matterwave::MatterWaveFrame::wavenumber);

    py::enum_<matterwave::BoundaryRule>(m, "BoundaryRule")
        .value("OneSided", matterwave::BoundaryRule::OneSided)
        .value("Periodic", matterwave::BoundaryRule::Periodic);

    py::class_<matterwave::MomentumExpectation>(m, "MomentumExpectation")
        .def_readonly("value", &matterwave::MomentumExpectation::value)
        .def_readonly("imaginary_part", &matterwave::MomentumExpectation::imaginary_part);

    m.def("xi_of", &matterwave::xi_of);
    m.def("plane_wave", &matterwave::plane_wave);
    m.def("de_broglie_wavelength", &matterwave::de_broglie_wavelength);
    m.def("apply_momentum_operator",
          py::overload_cast<const matterwave::MatterWaveFrame&, const WaveFunction&,
                            matterwave::BoundaryRule>(&matterwave::apply_momentum_operator),
          py::arg("frame"), py::arg("psi"),
          py::arg("boundary") = matterwave::BoundaryRule::OneSided);
    m.def("momentum_expectation",
          py::overload_cast<const matterwave::MatterWaveFrame&, const WaveFunction&,
                            matterwave::BoundaryRule>(&matterwave::momentum_expectation),
          py::arg("frame"), py::arg("psi"),
          py::arg("boundary") = matterwave::BoundaryRule::OneSided);

    py::class_<matterwave::DensitySpec>(m, "DensitySpec")
        .def(py::init([](double gamma, std::function<Complex(double)> amplitude) {
                 return matterwave::DensitySpec{gamma, std::move(amplitude)};
             }),
             py::arg("gamma"), py::arg("amplitude"))
        .def_readwrite("gamma", &matterwave::DensitySpec::gamma);
    m.def("constant_of_motion", &matterwave::constant_of_motion);

    // wavefield
    py::class_<wavefield::DispersionBundle>(m, "DispersionBundle")
        .def_readonly("wavenumber", &wavefield::DispersionBundle::wavenumber)
        .def_readonly("wavelength", &wavefield::DispersionBundle::wavelength)
        .def_readonly("omega_classical", &wavefield::DispersionBundle::omega_classical)
        .def_readonly("omega", &wavefield::DispersionBundle::omega)
        .def_readonly("energy", &wavefield::DispersionBundle::energy);
    m.def("dispersion_of", &wavefield::dispersion_of);

    py::class_<wavefield::WaveAnsatz>(m, "WaveAnsatz")
        .def_readonly("frame", &wavefield::WaveAnsatz::frame);
    m.def("exponential_ansatz", &wavefield::exponential_ansatz);
    m.def("gaussian_windowed_ansatz", &wavefield::gaussian_windowed_ansatz,
          py::arg("frame"), py::arg("sigma"));
    m.def("wave_residual", &wavefield::wave_residual, py::arg("ansatz"), py::arg("trajectory"),
          py::arg("potential"), py::arg("t"));
    m.def("free_tise_residual", &wavefield::free_tise_residual);

    py::class_<wavefield::IbpReport>(m, "IbpReport")
        .def_readonly("lhs", &wavefield::IbpReport::lhs)
        .def_readonly("rhs", &wavefield::IbpReport::rhs)
        .def_readonly("surface", &wavefield::IbpReport::surface)
        .def_readonly("rel_residual", &wavefield::IbpReport::rel_residual);
    m.def("ibp_residual", &wavefield::ibp_residual, py::arg("ansatz"), py::arg("potential"),
          py::arg("domain"), py::arg("enforce_decay") = true);

    // schrodinger
    py::class_<schrodinger::HamiltonianTridiag>(m, "HamiltonianTridiag")
        .def_readonly("grid", &schrodinger::HamiltonianTridiag::grid)
        .def_readonly("diag", &schrodinger::HamiltonianTridiag::diag)
        .def_readonly("off_diag", &schrodinger::HamiltonianTridiag::off_diag)
        .def_readonly("hbar", &schrodinger::HamiltonianTridiag::hbar)
        .def_readonly("mass", &schrodinger::HamiltonianTridiag::mass);
    m.def("build_hamiltonian", &schrodinger::build_hamiltonian, py::arg("grid"),
          py::arg("potential"), py::arg("mass") = 1.0, py::arg("hbar") = 1.0);

    py::class_<schrodinger::EigenPair>(m, "EigenPair")
        .def_readonly("energy", &schrodinger::EigenPair::energy)
        .def_readonly("state", &schrodinger::EigenPair::state);
    m.def("eigensolve", &schrodinger::eigensolve, py::arg("hamiltonian"), py::arg("count"));

    m.def("gaussian_packet", &schrodinger::gaussian_packet, py::arg("grid"), py::arg("x0"),
          py::arg("sigma"), py::arg("k0"));
    m.def("cn_step", &schrodinger::cn_step, py::arg("psi"), py::arg("hamiltonian"),
          py::arg("dt"));

    py::class_<schrodinger::PropagationTrace>(m, "PropagationTrace")
        .def_readonly("times", &schrodinger::PropagationTrace::times)
        .def_readonly("norms", &schrodinger::PropagationTrace::norms)
        .def_readonly("position", &schrodinger::PropagationTrace::position)
        .def_readonly("momentum", &schrodinger::PropagationTrace::momentum)
        .def_readonly("grad_potential", &schrodinger::PropagationTrace::grad_potential)
        .def_readonly("energy", &schrodinger::PropagationTrace::energy);
    m.def("propagate", &schrodinger::propagate, py::arg("psi"), py::arg("hamiltonian"),
          py::arg("dt"), py::arg("steps"), py::arg("record_every") = 1);

    m.def("expect_position", &schrodinger::expect_position);
    m.def("expect_momentum", &schrodinger::expect_momentum, py::arg("psi"),
          py::arg("hbar") = 1.0);
    m.def("expect_potential", &schrodinger::expect_potential);
    m.def("expect_potential_gradient", &schrodinger::expect_potential_gradient);
    m.def("expect_energy", &schrodinger::expect_energy);
    m.def("measured_width", &schrodinger::measured_width);

    // verify
    py::class_<verify::VerificationResult>(m, "VerificationResult")
        .def_readonly("name", &verify::VerificationResult::name)
        .def_readonly("residual", &verify::VerificationResult::residual)
        .def_readonly("tolerance", &verify::VerificationResult::tolerance)
        .def_readonly("passed", &verify::VerificationResult::passed)
        .def_readonly("details", &verify::VerificationResult::details)
        .def("__repr__", [](const verify::VerificationResult& r) {
            return "<VerificationResult " + r.name + (r.passed ? " passed" : " FAILED") + ">";
        });

    py::class_<verify::VerifyConfig>(m, "VerifyConfig")
        .def(py::init<>())
        .def_readwrite("grid_n", &verify::VerifyConfig::grid_n)
        .def_readwrite("dt", &verify::VerifyConfig::dt)
        .def_readwrite("tolerance_scale", &verify::VerifyConfig::tolerance_scale);

    py::class_<verify::PacketParams>(m, "PacketParams")
        .def(py::init<double, double, double>(), py::arg("x0") = 0.0, py::arg("sigma") = 1.0,
             py::arg("k0") = 0.0)
        .def_readwrite("x0", &verify::PacketParams::x0)
        .def_readwrite("sigma", &verify::PacketParams::sigma)
        .def_readwrite("k0", &verify::PacketParams::k0);

    m.def("ehrenfest_residual", &verify::ehrenfest_residual, py::arg("trace"),
          py::arg("tolerance") = 1e-4);
    m.def(
        "classical_quantum_compare",
        [](const dynamics::Potential& pot, const verify::PacketParams& packet, double horizon) {
            return verify::classical_quantum_compare(pot, packet, horizon);
        },
        py::arg("potential"), py::arg("packet"), py::arg("horizon"));
    m.def(
        "run_verification",
        [](int grid_n, double dt, double tolerance_scale) {
            return verify::run_all({grid_n, dt, tolerance_scale});
        },
        py::arg("grid_n") = 2000, py::arg("dt") = 1e-3, py::arg("tolerance_scale") = 1.0);

    m.attr("__version__") = "0.1.0";
}
