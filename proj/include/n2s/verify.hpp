#pragma once

#include <string>
#include <vector>

#include "n2s/dynamics.hpp"
#include "n2s/matterwave.hpp"
#include "n2s/schrodinger.hpp"

namespace n2s::verify {

using matterwave::MatterWaveFrame;
using schrodinger::HamiltonianTridiag;
using schrodinger::PropagationTrace;

struct VerificationResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string details;
};

inline VerificationResult make_result(std::string name, double residual, double tolerance,
                                      std::string details = {}) {
    return {std::move(name), residual, tolerance, residual <= tolerance, std::move(details)};
}

/// max over interior records of |d<p>/dt + <dU/dx>|, with d<p>/dt by central
/// differences on the recorded trace. Needs >= 3 records at uniform spacing.
VerificationResult ehrenfest_residual(const PropagationTrace& trace, double tolerance = 1e-4);

struct PacketParams {
    double x0 = 0.0;
    double sigma = 1.0;
    double k0 = 0.0;
};

struct CompareOptions {
    Grid1D grid{-12.0, 12.0, 2000};
    double dt = 1e-3;
    int record_every = 10;
    double hbar = 1.0;
    double mass = 1.0;
    double tolerance = 1e-3;
};

/// max over records of |<x>(t) - x_cl(t)| where the classical trajectory is
/// integrated by velocity Verlet from x_cl(0) = <x>(0), p_cl(0) = <p>(0).
VerificationResult classical_quantum_compare(const dynamics::Potential& pot,
                                             const PacketParams& packet, double horizon,
                                             const CompareOptions& opts = {});

struct OmegaHalvingOptions {
    double hbar = 1.0;
    double dt = 1e-3;
    int samples = 150;          // autocorrelation samples for the phase fit
    double envelope_sigma = 45.0;
    double grid_spacing = 0.01;
    double phase_tolerance = 1e-3;     // relative, sub-check (b)
    double spectrum_tolerance = 1e-4;  // relative, sub-check (c)
};

/// Frequency-halving check; requires frame.alpha == 1/hbar. Composite of
/// three sub-checks that must all pass:
///   (a) Omega == 2 E / hbar as plain arithmetic,
///   (b) the phase frequency of a propagated periodic free packet narrow in
///       k, measured from the unwrapped phase of <psi(0)|psi(t)> by a least
///       squares fit, equals omega = Omega/2 within phase_tolerance,
///   (c) the eigensolve energy of the free box state matching the frame's
///       wavenumber equals hbar * omega within spectrum_tolerance.
/// The reported residual is the worst sub-residual normalized by its
/// tolerance (tolerance 1).
VerificationResult omega_halving_check(const MatterWaveFrame& frame,
                                       const HamiltonianTridiag& free_box,
                                       const OmegaHalvingOptions& opts = {});

struct VerifyConfig {
    int grid_n = 2000;
    double dt = 1e-3;
    double tolerance_scale = 1.0;
};

/// Every named check plus the module-level residual suites, in a fixed
/// deterministic order. Never aborts on a failure; collects all results.
std::vector<VerificationResult> run_all(const VerifyConfig& config = {});

}  // namespace n2s::verify
