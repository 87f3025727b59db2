#include "n2s/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "n2s/errors.hpp"

namespace n2s::dynamics {

Potential Potential::free_space() { return Potential(Kind::free, 0.0); }

Potential Potential::harmonic(double stiffness) {
    return Potential(Kind::harmonic, stiffness);
}

Potential Potential::linear(double slope) { return Potential(Kind::linear, slope); }

Potential Potential::quartic(double coefficient) {
    return Potential(Kind::quartic, coefficient);
}

Potential Potential::tabulated(const Grid1D& grid, std::vector<double> values) {
    if (static_cast<int>(values.size()) != grid.n)
        throw std::invalid_argument("Potential::tabulated: value count does not match grid");
    Potential pot(Kind::tabulated, 0.0);
    pot.table_grid_ = grid;
    pot.table_values_ = std::move(values);
    // Nodal gradients: central differences inside, one-sided second order at the ends.
    const auto& v = pot.table_values_;
    const double h = grid.h;
    const int n = grid.n;
    pot.table_gradients_.resize(n);
    pot.table_gradients_[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (int i = 1; i + 1 < n; ++i)
        pot.table_gradients_[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    pot.table_gradients_[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    return pot;
}

namespace {

// Linear interpolation of nodal data; x must lie inside the table grid.
double interpolate(const Grid1D& grid, const std::vector<double>& nodal, double x) {
    if (x < grid.x_min || x > grid.x_max)
        throw OutOfDomainError("tabulated potential queried outside its grid");
    int i = static_cast<int>((x - grid.x_min) / grid.h);
    if (i >= grid.n - 1) i = grid.n - 2;
    const double t = (x - grid.node(i)) / grid.h;
    return (1.0 - t) * nodal[i] + t * nodal[i + 1];
}

}  // namespace

double Potential::value(double x) const {
    switch (kind_) {
        case Kind::free: return 0.0;
        case Kind::harmonic: return 0.5 * param_ * x * x;
        case Kind::linear: return param_ * x;
        case Kind::quartic: return param_ * x * x * x * x;
        case Kind::tabulated: return interpolate(table_grid_, table_values_, x);
    }
    throw std::logic_error("Potential::value: unreachable");
}

double Potential::gradient(double x) const {
    switch (kind_) {
        case Kind::free: return 0.0;
        case Kind::harmonic: return param_ * x;
        case Kind::linear: return param_;
        case Kind::quartic: return 4.0 * param_ * x * x * x;
        case Kind::tabulated: return interpolate(table_grid_, table_gradients_, x);
    }
    throw std::logic_error("Potential::gradient: unreachable");
}

const ParticleState& Trajectory::at_time(double t) const {
    if (states.empty()) throw OutOfDomainError("Trajectory::at_time: empty trajectory");
    const double t0 = states.front().time;
    const double t1 = states.back().time;
    const double slack = 0.5 * dt;
    if (t < t0 - slack || t > t1 + slack)
        throw OutOfDomainError("Trajectory::at_time: t outside the recorded range");
    if (dt == 0.0) return states.front();
    long i = std::lround((t - t0) / dt);
    if (i < 0) i = 0;
    if (i >= static_cast<long>(states.size())) i = static_cast<long>(states.size()) - 1;
    return states[static_cast<std::size_t>(i)];
}

double force_at(const Potential& pot, double x) { return -pot.gradient(x); }

ParticleState verlet_step(const ParticleState& s, const Potential& pot, double dt) {
    if (!(s.mass > 0.0)) throw std::invalid_argument("verlet_step: mass must be positive");
    if (!std::isfinite(s.position) || !std::isfinite(s.momentum) || !std::isfinite(dt))
        throw std::invalid_argument("verlet_step: non-finite state or step");
    if (dt == 0.0) return s;
    const double a0 = force_at(pot, s.position) / s.mass;
    ParticleState out = s;
    out.position = s.position + s.velocity() * dt + 0.5 * a0 * dt * dt;
    const double a1 = force_at(pot, out.position) / s.mass;
    out.momentum = s.momentum + 0.5 * s.mass * (a0 + a1) * dt;
    out.time = s.time + dt;
    return out;
}

Trajectory integrate(const ParticleState& s, const Potential& pot, double dt, int n) {
    if (n < 0) throw std::invalid_argument("integrate: step count must be non-negative");
    Trajectory traj;
    traj.dt = dt;
    traj.states.reserve(static_cast<std::size_t>(n) + 1);
    traj.states.push_back(s);
    for (int i = 0; i < n; ++i)
        traj.states.push_back(verlet_step(traj.states.back(), pot, dt));
    return traj;
}

double total_energy(const ParticleState& s, const Potential& pot) {
    return 0.5 * s.momentum * s.momentum / s.mass + pot.value(s.position);
}

}  // namespace n2s::dynamics
