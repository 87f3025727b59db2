#pragma once

#include <vector>

#include "n2s/dynamics.hpp"
#include "n2s/grid.hpp"

namespace n2s::schrodinger {

/// Real-symmetric three-point discretization of -(hbar^2/2m) d2/dx2 + U with
/// Dirichlet closure (psi = 0 on the phantom nodes just outside the grid):
/// diag_i = hbar^2/(m h^2) + U(x_i), off-diagonal -hbar^2/(2 m h^2).
struct HamiltonianTridiag {
    Grid1D grid;
    std::vector<double> diag;
    double off_diag = 0.0;
    double hbar = 1.0;
    double mass = 1.0;
    dynamics::Potential potential = dynamics::Potential::free_space();
};

HamiltonianTridiag build_hamiltonian(const Grid1D& grid, const dynamics::Potential& pot,
                                     double mass = 1.0, double hbar = 1.0);

/// H applied to nodal samples (Dirichlet closure).
std::vector<Complex> apply_hamiltonian(const HamiltonianTridiag& H,
                                       const std::vector<Complex>& v);

struct EigenPair {
    double energy = 0.0;
    WaveFunction state;
};

/// Lowest `count` eigenpairs, energies ascending. Eigenvalues by Sturm-count
/// bisection, eigenvectors by inverse iteration with deterministic
/// index-dependent seeds; non-convergence after bounded restarts throws
/// SolverError carrying the offending index. States come back with unit
/// trapezoid norm and mutually orthogonal under the grid's uniform weight
/// (the trapezoid rule closed with the Dirichlet zeros outside the grid).
std::vector<EigenPair> eigensolve(const HamiltonianTridiag& H, int count);

/// Normalized Gaussian packet exp(-(x-x0)^2/(4 sigma^2)) exp(i k0 x).
/// The grid must cover [x0 - 8 sigma, x0 + 8 sigma] (DomainTooSmallError).
WaveFunction gaussian_packet(const Grid1D& grid, double x0, double sigma, double k0);

/// One Crank-Nicolson step: (1 + i dt H / 2 hbar) psi' = (1 - i dt H / 2 hbar) psi,
/// solved by the tridiagonal Thomas algorithm. Unitary, so the quadrature
/// norm is preserved to rounding; exactly inverted by a -dt step.
WaveFunction cn_step(const WaveFunction& psi, const HamiltonianTridiag& H, double dt);

/// Observable record of a propagation, sampled every record_every steps.
struct PropagationTrace {
    std::vector<double> times;
    std::vector<double> norms;
    std::vector<double> position;        // <x>
    std::vector<double> momentum;        // <p>
    std::vector<double> grad_potential;  // <dU/dx>
    std::vector<double> energy;          // <H>

    std::size_t size() const { return times.size(); }
};

PropagationTrace propagate(const WaveFunction& psi, const HamiltonianTridiag& H, double dt,
                           long steps, int record_every = 1);

/// Trapezoid-quadrature expectation values. All but the norm require
/// |norm(psi) - 1| <= 1e-6 (NormalizationError otherwise).
double expect_position(const WaveFunction& psi);
double expect_momentum(const WaveFunction& psi, double hbar = 1.0);
double expect_potential(const WaveFunction& psi, const dynamics::Potential& pot);
double expect_potential_gradient(const WaveFunction& psi, const dynamics::Potential& pot);
double expect_energy(const WaveFunction& psi, const HamiltonianTridiag& H);

/// sqrt(<x^2> - <x>^2).
double measured_width(const WaveFunction& psi);

}  // namespace n2s::schrodinger
