#include <doctest.h>

#include <cmath>
#include <numbers>

#include "n2s/errors.hpp"
#include "n2s/wavefield.hpp"

using namespace n2s;
using namespace n2s::wavefield;
using n2s::dynamics::Potential;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("dispersion bundle fields by substitution") {
    MatterWaveFrame frame;  // alpha = 1, p0 = 1, m = 1
    const auto b = dispersion_of(frame);
    CHECK(b.wavenumber == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.wavelength == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(b.omega_classical == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.omega == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.energy == doctest::Approx(0.5).epsilon(1e-15));

    MatterWaveFrame faster;
    faster.p0 = {2.0, 0.0, 0.0};
    const auto f = dispersion_of(faster);
    CHECK(f.omega_classical == 4.0);
    CHECK(f.energy == 2.0);
    CHECK(f.omega_classical == 2.0 * f.energy);  // Omega = 2 E / hbar at hbar = 1
    CHECK(f.omega == 0.5 * f.omega_classical);

    MatterWaveFrame zero;
    zero.p0 = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)dispersion_of(zero), std::domain_error);
}

TEST_CASE("omega ratio stays exactly two in the vanishing-momentum limit") {
    MatterWaveFrame slow;
    slow.p0 = {1e-3, 0.0, 0.0};
    const auto b = dispersion_of(slow);
    CHECK(b.omega_classical < 2e-6);
    CHECK(b.omega_classical / b.omega == 2.0);
}

TEST_CASE("omega halving closes onto the kinetic energy for dyadic hbar") {
    for (double hbar : {1.0, 0.5, 2.0}) {
        MatterWaveFrame frame;
        frame.alpha = 1.0 / hbar;
        frame.p0 = {1.5, 0.0, 0.0};
        frame.mass = 2.0;
        const auto b = dispersion_of(frame);
        CHECK(b.omega == 0.5 * b.omega_classical);
        CHECK(hbar * b.omega == b.energy);
    }
}

TEST_CASE("wave residual vanishes along free and harmonic trajectories") {
    MatterWaveFrame frame;
    const auto ansatz = exponential_ansatz(frame);

    const auto free_pot = Potential::free_space();
    const auto free_traj = dynamics::integrate({0.3, 0.7, 1.0, 0.0}, free_pot, 1e-3, 5000);
    for (double t : {0.0, 1.0, 2.5, 4.9})
        CHECK(std::abs(wave_residual(ansatz, free_traj, free_pot, t)) < 1e-12);

    const auto harm_pot = Potential::harmonic(1.0);
    const auto harm_traj = dynamics::integrate({1.0, 0.0, 1.0, 0.0}, harm_pot, 1e-3, 5000);
    for (double t : {0.0, 0.7, 2.2, 4.4})
        CHECK(std::abs(wave_residual(ansatz, harm_traj, harm_pot, t)) < 1e-10);
}

TEST_CASE("wave residual rejects a time outside the trajectory") {
    MatterWaveFrame frame;
    const auto ansatz = exponential_ansatz(frame);
    const auto pot = Potential::free_space();
    const auto traj = dynamics::integrate({0.0, 1.0, 1.0, 0.0}, pot, 1e-2, 100);
    CHECK_THROWS_AS((void)wave_residual(ansatz, traj, pot, 5.0), OutOfDomainError);
}

TEST_CASE("wave residual of a constant profile is exactly zero") {
    MatterWaveFrame frame;
    WaveAnsatz constant;
    constant.frame = frame;
    constant.f = [](double) { return Complex(1.0, 0.0); };
    constant.f_prime = [](double) { return Complex(0.0, 0.0); };
    constant.f_double_prime = [](double) { return Complex(0.0, 0.0); };
    const auto pot = Potential::harmonic(1.0);
    const auto traj = dynamics::integrate({1.0, 0.0, 1.0, 0.0}, pot, 1e-3, 100);
    CHECK(std::abs(wave_residual(constant, traj, pot, 0.05)) == 0.0);
}

TEST_CASE("chain-rule second derivative matches a finite difference along the path") {
    MatterWaveFrame frame;
    const auto ansatz = exponential_ansatz(frame);
    const auto pot = Potential::harmonic(1.0);
    const double dt = 1e-4;
    const auto traj = dynamics::integrate({1.0, 0.0, 1.0, 0.0}, pot, dt, 20000);
    const double alpha = frame.alpha;
    const double p0 = frame.momentum_magnitude();
    for (int idx : {100, 5000, 12000, 19000}) {
        const auto& prev = traj.states[idx - 1];
        const auto& cur = traj.states[idx];
        const auto& next = traj.states[idx + 1];
        const Complex fd = (ansatz.f(alpha * p0 * next.position) -
                            2.0 * ansatz.f(alpha * p0 * cur.position) +
                            ansatz.f(alpha * p0 * prev.position)) /
                           (dt * dt);
        const double v = cur.velocity();
        const double a = dynamics::force_at(pot, cur.position) / cur.mass;
        const Complex analytic =
            alpha * alpha * (p0 * v) * (p0 * v) *
                ansatz.f_double_prime(alpha * p0 * cur.position) +
            alpha * (p0 * a) * ansatz.f_prime(alpha * p0 * cur.position);
        CHECK(std::abs(fd - analytic) < 1e-5);
    }
}

TEST_CASE("free TISE residual is exactly zero, alpha cancels identically") {
    const struct {
        double alpha, p0, mass, energy;
    } cases[] = {{1.0, 1.0, 1.0, 0.5}, {2.0, 1.0, 1.0, 0.5}, {1.0, 3.0, 2.0, 2.25}};
    for (const auto& c : cases) {
        MatterWaveFrame frame{c.alpha, {c.p0, 0.0, 0.0}, c.mass, 1.0};
        CHECK(free_tise_residual(frame) == 0.0);
        CHECK(dispersion_of(frame).energy == c.energy);
    }
}

TEST_CASE("free TISE residual stays at rounding for generic parameters") {
    MatterWaveFrame frame{0.7314, {1.171, -0.33, 0.48}, 1.618, 1.0};
    const double energy = dispersion_of(frame).energy;
    CHECK(free_tise_residual(frame) <= 4.0 * 2.220446049250313e-16 * energy);
}

TEST_CASE("integration-by-parts identity on a decaying window") {
    MatterWaveFrame frame;
    const auto ansatz = gaussian_windowed_ansatz(frame, 1.0);
    const auto pot = Potential::harmonic(1.0);

    const auto report = ibp_residual(ansatz, pot, Grid1D(-12.0, 12.0, 24001));
    CHECK(report.rel_residual < 1e-6);
    CHECK(std::abs(report.surface) < 1e-12);

    // Double-resolution oracle: both quadrature routes are converged, so the
    // halved-h values must agree with the working-resolution ones.
    const auto fine = ibp_residual(ansatz, pot, Grid1D(-12.0, 12.0, 48001));
    CHECK(std::abs(fine.lhs - report.lhs) < 1e-10);
    CHECK(std::abs(fine.rhs - report.rhs) < 1e-10);
}

TEST_CASE("integration-by-parts residual is bounded by O(h^2) under refinement") {
    MatterWaveFrame frame;
    const auto ansatz = gaussian_windowed_ansatz(frame, 1.0);
    const auto pot = Potential::harmonic(1.0);
    for (int n : {6001, 12001, 24001}) {
        Grid1D domain(-12.0, 12.0, n);
        const double h = domain.h;
        CHECK(ibp_residual(ansatz, pot, domain).rel_residual < h * h);
    }
}

TEST_CASE("zero potential collapses both sides of the identity") {
    MatterWaveFrame frame;
    const auto ansatz = gaussian_windowed_ansatz(frame, 1.0);
    const auto report = ibp_residual(ansatz, Potential::free_space(), Grid1D(-12.0, 12.0, 2001));
    CHECK(std::abs(report.lhs) == 0.0);
    CHECK(std::abs(report.rhs) == 0.0);
    CHECK(std::abs(report.surface) == 0.0);
}

TEST_CASE("shrinking the domain exposes the surface term") {
    MatterWaveFrame frame;
    const auto ansatz = gaussian_windowed_ansatz(frame, 1.0);
    const auto pot = Potential::harmonic(1.0);

    CHECK_THROWS_AS((void)ibp_residual(ansatz, pot, Grid1D(-2.0, 2.0, 2001)),
                    DomainTooSmallError);
    const auto report = ibp_residual(ansatz, pot, Grid1D(-2.0, 2.0, 2001), false);
    CHECK(std::abs(report.surface) > 1e-3);
}

TEST_CASE("divergence reduction matches a high-order finite difference") {
    MatterWaveFrame frame;
    const auto ansatz = gaussian_windowed_ansatz(frame, 1.0);
    const double delta = 1e-3;
    const auto product = [&](double x) { return ansatz.f(x) * ansatz.f_prime(x); };
    for (double x : {-2.0, -0.6, 0.0, 0.9, 2.4}) {
        const Complex fd = (-product(x + 2 * delta) + 8.0 * product(x + delta) -
                            8.0 * product(x - delta) + product(x - 2 * delta)) /
                           (12.0 * delta);
        const Complex analytic = ansatz.f_prime(x) * ansatz.f_prime(x) +
                                 ansatz.f(x) * ansatz.f_double_prime(x);
        CHECK(std::abs(fd - analytic) < 1e-10);
    }
}

TEST_CASE("exponential ansatz keeps unit modulus everywhere") {
    MatterWaveFrame frame;
    const auto ansatz = exponential_ansatz(frame);
    for (double xi : {-7.7, -0.1, 0.0, 3.9, 120.0})
        CHECK(std::abs(std::norm(ansatz.f(xi)) - 1.0) < 1e-15);
}
