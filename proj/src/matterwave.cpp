#include "n2s/matterwave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "n2s/errors.hpp"

namespace n2s::matterwave {

void MatterWaveFrame::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("MatterWaveFrame: alpha must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("MatterWaveFrame: mass must be positive");
    if (!(volume > 0.0)) throw std::invalid_argument("MatterWaveFrame: volume must be positive");
    if (!(p0.norm() > 0.0)) throw std::invalid_argument("MatterWaveFrame: |p0| must be positive");
}

double xi_of(const MatterWaveFrame& frame, const Vec3& r) {
    return frame.alpha * r.dot(frame.p0);
}

Complex plane_wave(const MatterWaveFrame& frame, const Vec3& r) {
    const double xi = xi_of(frame, r);
    return std::polar(1.0 / std::sqrt(frame.volume), xi);
}

double de_broglie_wavelength(const MatterWaveFrame& frame) {
    const double p = frame.momentum_magnitude();
    if (!(p > 0.0))
        throw std::domain_error("de_broglie_wavelength: undefined for |p0| = 0");
    return 2.0 * std::numbers::pi / (frame.alpha * p);
}

namespace {

std::vector<Complex> grid_derivative(const WaveFunction& psi, BoundaryRule boundary) {
    const int n = psi.grid.n;
    const double h = psi.grid.h;
    const auto& v = psi.values;
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (int i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    if (boundary == BoundaryRule::Periodic) {
        // Node n-1 duplicates node 0; wrap with period n-1.
        d[0] = (v[1] - v[n - 2]) / (2.0 * h);
        d[n - 1] = d[0];
    } else {
        d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
        d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    }
    return d;
}

}  // namespace

WaveFunction apply_momentum_operator(double alpha, const WaveFunction& psi,
                                     BoundaryRule boundary) {
    if (psi.grid.n < 3)
        throw std::invalid_argument("apply_momentum_operator: grid too small");
    auto d = grid_derivative(psi, boundary);
    const Complex minus_i_over_alpha(0.0, -1.0 / alpha);
    for (auto& c : d) c *= minus_i_over_alpha;
    return WaveFunction(psi.grid, std::move(d));
}

WaveFunction apply_momentum_operator(const MatterWaveFrame& frame, const WaveFunction& psi,
                                     BoundaryRule boundary) {
    return apply_momentum_operator(frame.alpha, psi, boundary);
}

MomentumExpectation momentum_expectation(double alpha, const WaveFunction& psi,
                                         BoundaryRule boundary) {
    const double nrm = psi.norm();
    if (std::abs(nrm - 1.0) > 1e-6)
        throw NormalizationError("momentum_expectation: input must be unit-normalized");
    const WaveFunction p_psi = apply_momentum_operator(alpha, psi, boundary);
    const Complex ip = inner_product(psi, p_psi);
    return {ip.real(), ip.imag()};
}

MomentumExpectation momentum_expectation(const MatterWaveFrame& frame, const WaveFunction& psi,
                                         BoundaryRule boundary) {
    return momentum_expectation(frame.alpha, psi, boundary);
}

double constant_of_motion(const DensitySpec& spec, const Grid1D& domain) {
    if (!spec.amplitude)
        throw std::invalid_argument("constant_of_motion: missing amplitude handle");
    std::vector<double> density(static_cast<std::size_t>(domain.n));
    for (int i = 0; i < domain.n; ++i)
        density[static_cast<std::size_t>(i)] = std::norm(spec.amplitude(domain.node(i)));
    const double total = trapezoid(domain, density);
    if (std::abs(total - 1.0) > 1e-6)
        throw NormalizationError("constant_of_motion: Gamma is not normalized on the domain");
    return spec.gamma * total;
}

}  // namespace n2s::matterwave
