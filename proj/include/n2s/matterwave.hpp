#pragma once

#include <functional>

#include "n2s/grid.hpp"
#include "n2s/vec3.hpp"

namespace n2s::matterwave {

/// Parameter bundle (alpha, p0, mass, volume) of a constant-momentum matter
/// wave. alpha carries units of an inverse action; alpha = 1/hbar recovers
/// the de Broglie conventions. Natural units set hbar = 1, so alpha = 1 is
/// the physical default.
struct MatterWaveFrame {
    double alpha = 1.0;
    Vec3 p0{1.0, 0.0, 0.0};
    double mass = 1.0;
    double volume = 1.0;

    double momentum_magnitude() const { return p0.norm(); }
    double wavenumber() const { return alpha * p0.norm(); }

    /// Throws std::invalid_argument unless alpha, mass, volume, |p0| > 0.
    void validate() const;
};

/// Reduced phase variable xi = alpha r.p0.
double xi_of(const MatterWaveFrame& frame, const Vec3& r);

/// V^{-1/2} exp(i xi); modulus is V^{-1/2} everywhere.
Complex plane_wave(const MatterWaveFrame& frame, const Vec3& r);

/// lambda = 2 pi / (alpha |p0|). Throws if |p0| = 0.
double de_broglie_wavelength(const MatterWaveFrame& frame);

/// Endpoint handling for grid derivatives. OneSided closes with second-order
/// one-sided stencils; Periodic identifies node n-1 with node 0 (the grid
/// spans exactly one period, endpoint duplicated).
enum class BoundaryRule { OneSided, Periodic };

/// P psi = -(i/alpha) d psi/dx by central differences.
WaveFunction apply_momentum_operator(double alpha, const WaveFunction& psi,
                                     BoundaryRule boundary = BoundaryRule::OneSided);
WaveFunction apply_momentum_operator(const MatterWaveFrame& frame, const WaveFunction& psi,
                                     BoundaryRule boundary = BoundaryRule::OneSided);

/// <P> = trapezoid of conj(psi) P psi. The imaginary part is zero for exact
/// arithmetic on localized states and is reported as a diagnostic.
struct MomentumExpectation {
    double value = 0.0;
    double imaginary_part = 0.0;
};

/// Requires |norm(psi) - 1| <= 1e-6 (NormalizationError otherwise).
MomentumExpectation momentum_expectation(double alpha, const WaveFunction& psi,
                                         BoundaryRule boundary = BoundaryRule::OneSided);
MomentumExpectation momentum_expectation(const MatterWaveFrame& frame, const WaveFunction& psi,
                                         BoundaryRule boundary = BoundaryRule::OneSided);

/// Density rho = gamma |Gamma|^2 with Gamma sampled along the line of motion.
struct DensitySpec {
    double gamma = 1.0;
    std::function<Complex(double)> amplitude;
};

/// C = gamma * integral of |Gamma|^2 over the domain = gamma. Requires the
/// quadrature of |Gamma|^2 to be within 1e-6 of 1 (NormalizationError).
double constant_of_motion(const DensitySpec& spec, const Grid1D& domain);

}  // namespace n2s::matterwave
