#pragma once

#include <vector>

#include "n2s/grid.hpp"

namespace n2s::dynamics {

/// Point particle on the 1D line of motion: position, momentum, mass, time.
struct ParticleState {
    double position = 0.0;
    double momentum = 0.0;
    double mass = 1.0;
    double time = 0.0;

    double velocity() const { return momentum / mass; }
};

/// Conservative potential with analytic value and gradient.
///
/// Analytic kinds: free (U = 0), harmonic (U = k x^2 / 2), linear (U = a x),
/// quartic (U = c x^4). The tabulated kind interpolates nodal values linearly
/// and defines nodal gradients by central differences (one-sided second-order
/// stencils at the endpoints); queries outside its grid throw OutOfDomainError.
class Potential {
public:
    enum class Kind { free, harmonic, linear, quartic, tabulated };

    static Potential free_space();
    static Potential harmonic(double stiffness);
    static Potential linear(double slope);
    static Potential quartic(double coefficient);
    static Potential tabulated(const Grid1D& grid, std::vector<double> values);

    Kind kind() const { return kind_; }
    double parameter() const { return param_; }

    double value(double x) const;
    double gradient(double x) const;

private:
    Potential(Kind kind, double param) : kind_(kind), param_(param) {}

    Kind kind_ = Kind::free;
    double param_ = 0.0;
    Grid1D table_grid_;
    std::vector<double> table_values_;
    std::vector<double> table_gradients_;
};

/// States at uniform spacing dt; states[0] is the initial condition.
struct Trajectory {
    std::vector<ParticleState> states;
    double dt = 0.0;

    /// State whose time stamp is nearest to t. Throws OutOfDomainError
    /// outside [t0, t0 + n dt].
    const ParticleState& at_time(double t) const;
};

/// F = -dU/dx.
double force_at(const Potential& pot, double x);

/// One velocity-Verlet step. dt = 0 returns the input unchanged.
ParticleState verlet_step(const ParticleState& s, const Potential& pot, double dt);

/// n velocity-Verlet steps; the result holds n + 1 states.
Trajectory integrate(const ParticleState& s, const Potential& pot, double dt, int n);

/// p^2 / (2m) + U(x).
double total_energy(const ParticleState& s, const Potential& pot);

}  // namespace n2s::dynamics
