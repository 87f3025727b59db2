#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "n2s/errors.hpp"
#include "n2s/matterwave.hpp"
#include "n2s/schrodinger.hpp"
#include "n2s/wavefield.hpp"

using namespace n2s;
using namespace n2s::matterwave;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("xi_of is the scaled projection onto p0") {
    MatterWaveFrame frame;
    frame.p0 = {2.0, 0.0, 0.0};
    CHECK(xi_of(frame, {1.0, 0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(xi_of(frame, {0.0, 3.0, -1.5}) == 0.0);

    MatterWaveFrame half;
    half.alpha = 0.5;
    half.p0 = {0.0, 3.0, 0.0};
    CHECK(xi_of(half, {0.0, 2.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("plane_wave values and modulus constraint") {
    MatterWaveFrame frame;
    frame.volume = 4.0;
    const Complex at_origin = plane_wave(frame, {0.0, 0.0, 0.0});
    CHECK(at_origin.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(at_origin.imag() == 0.0);

    MatterWaveFrame unit;
    unit.p0 = {kPi, 0.0, 0.0};
    const Complex at_pi = plane_wave(unit, {1.0, 0.0, 0.0});
    CHECK(at_pi.real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(at_pi.imag()) < 1e-15);

    // V |Gamma|^2 = 1 pointwise, to machine precision.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    MatterWaveFrame any{0.8, {0.3, -1.1, 0.4}, 1.7, 2.9};
    for (int i = 0; i < 50; ++i) {
        const Vec3 r{coord(rng), coord(rng), coord(rng)};
        CHECK(std::abs(any.volume * std::norm(plane_wave(any, r)) - 1.0) < 1e-14);
    }
}

TEST_CASE("plane_wave is periodic under alpha dr.p0 = 2 pi") {
    MatterWaveFrame frame{1.3, {0.4, 1.1, -0.2}, 1.0, 2.0};
    const double p = frame.momentum_magnitude();
    const Vec3 direction = frame.p0 * (1.0 / p);
    const Vec3 shift = direction * (2.0 * kPi / (frame.alpha * p));
    for (const Vec3 r : {Vec3{0.2, -0.4, 0.9}, Vec3{-2.0, 0.1, 0.3}}) {
        const Complex a = plane_wave(frame, r);
        const Complex b = plane_wave(frame, r + shift);
        CHECK(std::abs(a - b) < 1e-14);
    }
}

TEST_CASE("de Broglie wavelength from the periodicity route") {
    MatterWaveFrame frame;
    frame.p0 = {2.0 * kPi, 0.0, 0.0};
    CHECK(de_broglie_wavelength(frame) == doctest::Approx(1.0).epsilon(1e-15));

    MatterWaveFrame unit;
    CHECK(de_broglie_wavelength(unit) == doctest::Approx(2.0 * kPi).epsilon(1e-15));

    MatterWaveFrame zero;
    zero.p0 = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)de_broglie_wavelength(zero), std::domain_error);
}

TEST_CASE("both wavelength routes coincide") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> logs(-1.5, 1.5);
    for (int i = 0; i < 30; ++i) {
        MatterWaveFrame frame;
        frame.alpha = std::exp(logs(rng));
        frame.p0 = {std::exp(logs(rng)), 0.2, -0.4};
        frame.mass = std::exp(logs(rng));
        const double periodicity = de_broglie_wavelength(frame);
        const double kinematics = wavefield::dispersion_of(frame).wavelength;
        CHECK(std::abs(periodicity - kinematics) / periodicity < 1e-14);
    }
}

namespace {

WaveFunction sampled_plane_wave(const MatterWaveFrame& frame, const Grid1D& grid) {
    std::vector<Complex> values(static_cast<std::size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i)
        values[i] = plane_wave(frame, {grid.node(i), 0.0, 0.0});
    return WaveFunction(grid, std::move(values));
}

}  // namespace

TEST_CASE("momentum operator: plane wave is an eigenfunction to O(h^2)") {
    MatterWaveFrame frame;  // k = 1
    const double length = 2.0 * kPi;
    frame.volume = length;
    Grid1D grid(0.0, length, 6284);  // h ~ 1e-3
    const auto psi = sampled_plane_wave(frame, grid);
    const auto p_psi = apply_momentum_operator(frame, psi);
    const double p0 = frame.momentum_magnitude();
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i)
        worst = std::max(worst, std::abs(p_psi.values[i] - p0 * psi.values[i]) /
                                    (p0 * std::abs(psi.values[i])));
    CHECK(worst < 1e-4);
}

TEST_CASE("momentum operator on a real or constant profile") {
    Grid1D grid(-1.0, 1.0, 201);
    std::vector<Complex> real_values(201), constant(201, Complex(0.7, 0.3));
    for (int i = 0; i < 201; ++i)
        real_values[i] = std::exp(-grid.node(i) * grid.node(i));
    const auto d_real = apply_momentum_operator(1.0, WaveFunction(grid, real_values));
    for (const auto& v : d_real.values) CHECK(v.real() == 0.0);  // -i times a real derivative

    // Interior differences cancel exactly; the one-sided endpoints leave
    // rounding residue at the |c| eps / h scale.
    const auto d_const = apply_momentum_operator(1.0, WaveFunction(grid, constant));
    for (const auto& v : d_const.values) CHECK(std::abs(v) < 1e-13);
}

TEST_CASE("momentum expectation of a closed plane wave returns p0") {
    MatterWaveFrame frame;  // k = 1, p0 = 1
    const double length = 2.0 * kPi;
    frame.volume = length;
    Grid1D grid(0.0, length, 2001);
    const auto psi = sampled_plane_wave(frame, grid);
    const auto expectation = momentum_expectation(frame, psi, BoundaryRule::Periodic);
    CHECK(std::abs(expectation.value - 1.0) < 1e-5);
}

TEST_CASE("momentum expectation of localized packets") {
    Grid1D grid(-12.0, 12.0, 2401);  // h = 0.01

    const auto real_packet = schrodinger::gaussian_packet(grid, 0.0, 1.0, 0.0);
    const auto still = momentum_expectation(1.0, real_packet);
    CHECK(std::abs(still.value) < 1e-15);
    CHECK(std::abs(still.imaginary_part) < 1e-8);

    // Drifting packet: the analytic expectation is k0 / alpha; the O(h^2)
    // stencil bias (k0^3 + 3 k0 / (4 sigma^2)) h^2 / 6 stays below 1e-6 for
    // this k0 at h = 1e-2.
    const double k0 = 0.05;
    const auto drifting = schrodinger::gaussian_packet(grid, 0.0, 1.0, k0);
    const auto moving = momentum_expectation(1.0, drifting);
    CHECK(std::abs(moving.value - k0) < 1e-6);
    CHECK(std::abs(moving.imaginary_part) < 1e-8);
}

TEST_CASE("momentum expectation insists on a normalized state") {
    Grid1D grid(-12.0, 12.0, 401);
    auto psi = schrodinger::gaussian_packet(grid, 0.0, 1.0, 0.0);
    for (auto& v : psi.values) v *= 1.1;
    CHECK_THROWS_AS((void)momentum_expectation(1.0, psi), NormalizationError);
}

TEST_CASE("momentum operator eigenrelation converges at second order") {
    MatterWaveFrame frame;
    const double length = 2.0 * kPi;
    frame.volume = length;
    std::vector<double> errors;
    for (int n : {1572, 3143, 6284, 12567}) {
        Grid1D grid(0.0, length, n);
        const auto psi = sampled_plane_wave(frame, grid);
        const auto p_psi = apply_momentum_operator(frame, psi);
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(p_psi.values[i] - psi.values[i]) /
                                        std::abs(psi.values[i]));
        errors.push_back(worst);
    }
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const double order = std::log2(errors[i] / errors[i + 1]);
        CHECK(order > 1.9);
        CHECK(order < 2.1);
    }
}

TEST_CASE("constant_of_motion returns gamma for a normalized density") {
    Grid1D domain(-12.0, 12.0, 4001);
    const double norm_const = std::pow(2.0 * kPi, -0.25);  // unit L2 Gaussian, sigma = 1
    const auto gaussian = [norm_const](double x) {
        return Complex(norm_const * std::exp(-x * x / 4.0), 0.0);
    };
    CHECK(constant_of_motion({3.0, gaussian}, domain) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(constant_of_motion({0.0, gaussian}, domain) == 0.0);

    // Plane wave over its own normalization volume: quadrature of the flat
    // density is exact and the pointwise constraint V |Gamma|^2 = 1 holds.
    MatterWaveFrame frame;
    const double length = 2.0 * kPi;
    frame.volume = length;
    Grid1D box(0.0, length, 501);
    const auto wave = [&frame](double x) { return plane_wave(frame, {x, 0.0, 0.0}); };
    CHECK(constant_of_motion({1.0, wave}, box) == doctest::Approx(1.0).epsilon(1e-14));
    for (double x : {0.0, 1.3, 5.9})
        CHECK(frame.volume * std::norm(wave(x)) == doctest::Approx(1.0).epsilon(1e-14));

    const auto unnormalized = [](double) { return Complex(1.0, 0.0); };
    CHECK_THROWS_AS((void)constant_of_motion({1.0, unnormalized}, domain),
                    NormalizationError);
}

TEST_CASE("frame validation rejects non-physical parameters") {
    MatterWaveFrame bad;
    bad.alpha = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = MatterWaveFrame{};
    bad.p0 = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
