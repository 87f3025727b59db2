#include "n2s/schrodinger.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "n2s/errors.hpp"
#include "n2s/matterwave.hpp"

namespace n2s::schrodinger {

HamiltonianTridiag build_hamiltonian(const Grid1D& grid, const dynamics::Potential& pot,
                                     double mass, double hbar) {
    if (grid.n < 3) throw std::invalid_argument("build_hamiltonian: grid too small");
    if (!(mass > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("build_hamiltonian: mass and hbar must be positive");
    HamiltonianTridiag H;
    H.grid = grid;
    H.hbar = hbar;
    H.mass = mass;
    H.potential = pot;
    H.off_diag = -hbar * hbar / (2.0 * mass * grid.h * grid.h);
    H.diag.resize(static_cast<std::size_t>(grid.n));
    const double kinetic = hbar * hbar / (mass * grid.h * grid.h);
    for (int i = 0; i < grid.n; ++i) H.diag[i] = kinetic + pot.value(grid.node(i));
    return H;
}

std::vector<Complex> apply_hamiltonian(const HamiltonianTridiag& H,
                                       const std::vector<Complex>& v) {
    const int n = H.grid.n;
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("apply_hamiltonian: size mismatch");
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Complex acc = H.diag[i] * v[i];
        if (i > 0) acc += H.off_diag * v[i - 1];
        if (i + 1 < n) acc += H.off_diag * v[i + 1];
        out[i] = acc;
    }
    return out;
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly
// below x, from the Sturm sequence of leading-minor pivots.
int sturm_count_below(const std::vector<double>& diag, double off, double x, double pivmin) {
    const double off2 = off * off;
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        q = (i == 0) ? diag[0] - x : diag[i] - x - off2 / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

// Eigenvalue of index k (0-based, ascending) by bisection on the Sturm count.
double bisect_eigenvalue(const std::vector<double>& diag, double off, int k, double lo,
                         double hi, double pivmin) {
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) return mid;  // interval at ulp resolution
        if (sturm_count_below(diag, off, mid, pivmin) > k)
            hi = mid;
        else
            lo = mid;
    }
}

// Deterministic start vector; splitmix64 keeps restarts index-dependent.
std::vector<double> seeded_vector(int n, std::uint64_t seed) {
    std::vector<double> v(static_cast<std::size_t>(n));
    std::uint64_t s = seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
    for (auto& x : v) {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        x = static_cast<double>(z >> 11) / 9007199254740992.0 - 0.5;
    }
    return v;
}

// LU factorization with partial pivoting of the shifted tridiagonal
// (diag - shift), then one solve. Fill-in needs a second superdiagonal.
class ShiftedTridiagSolver {
public:
    ShiftedTridiagSolver(const std::vector<double>& diag, double off, double shift)
        : n_(static_cast<int>(diag.size())), lower_(n_), main_(n_), upper1_(n_), upper2_(n_),
          swapped_(n_) {
        for (int i = 0; i < n_; ++i) {
            main_[i] = diag[i] - shift;
            upper1_[i] = (i + 1 < n_) ? off : 0.0;
            upper2_[i] = 0.0;
        }
        std::vector<double> sub(n_, off);
        const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
        for (int i = 0; i + 1 < n_; ++i) {
            double below = sub[i + 1];
            if (std::abs(below) > std::abs(main_[i])) {
                swapped_[i] = true;
                std::swap(main_[i], below);
                std::swap(upper1_[i], main_[i + 1]);
                upper2_[i] = upper1_[i + 1];
                upper1_[i + 1] = 0.0;
            } else {
                swapped_[i] = false;
            }
            if (std::abs(main_[i]) < tiny) main_[i] = tiny;
            const double m = below / main_[i];
            lower_[i] = m;
            main_[i + 1] -= m * upper1_[i];
            upper1_[i + 1] -= m * upper2_[i];
        }
        if (std::abs(main_[n_ - 1]) < tiny) main_[n_ - 1] = tiny;
    }

    void solve(std::vector<double>& rhs) const {
        for (int i = 0; i + 1 < n_; ++i) {
            if (swapped_[i]) std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= lower_[i] * rhs[i];
        }
        for (int i = n_ - 1; i >= 0; --i) {
            double acc = rhs[i];
            if (i + 1 < n_) acc -= upper1_[i] * rhs[i + 1];
            if (i + 2 < n_) acc -= upper2_[i] * rhs[i + 2];
            rhs[i] = acc / main_[i];
        }
    }

private:
    int n_;
    std::vector<double> lower_, main_, upper1_, upper2_;
    std::vector<bool> swapped_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

std::vector<EigenPair> eigensolve(const HamiltonianTridiag& H, int count) {
    const int n = H.grid.n;
    if (count < 1 || count > n)
        throw std::invalid_argument("eigensolve: count must lie in [1, n]");

    // Gershgorin bounds.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const double radius_mid = 2.0 * std::abs(H.off_diag);
    for (int i = 0; i < n; ++i) {
        const double r = (i == 0 || i == n - 1) ? std::abs(H.off_diag) : radius_mid;
        lo = std::min(lo, H.diag[i] - r);
        hi = std::max(hi, H.diag[i] + r);
    }
    const double scale = std::max(std::abs(lo), std::abs(hi));
    const double pivmin =
        std::max(H.off_diag * H.off_diag, scale * scale) * std::numeric_limits<double>::min();

    std::vector<double> eigenvalues(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        eigenvalues[k] = bisect_eigenvalue(H.diag, H.off_diag, k, lo, hi, pivmin);

    const double h = H.grid.h;
    const double residual_tol = 1e-8;
    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    std::vector<std::vector<double>> accepted;  // unit 2-norm copies for orthogonalization

    for (int k = 0; k < count; ++k) {
        const double lambda = eigenvalues[k];
        ShiftedTridiagSolver solver(H.diag, H.off_diag, lambda);
        std::vector<double> v;
        double residual = std::numeric_limits<double>::infinity();
        const int max_restarts = 4;
        for (int restart = 0; restart < max_restarts && residual > residual_tol; ++restart) {
            v = seeded_vector(n, static_cast<std::uint64_t>(k + 1) * 1000003ULL +
                                     static_cast<std::uint64_t>(restart));
            for (int iter = 0; iter < 8; ++iter) {
                solver.solve(v);
                for (const auto& prev : accepted) {
                    const double c = dot(prev, v);
                    for (int i = 0; i < n; ++i) v[i] -= c * prev[i];
                }
                const double nrm = std::sqrt(dot(v, v));
                if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
                for (auto& x : v) x /= nrm;
                // ||(H - lambda) v||_2 with unit 2-norm v.
                double rss = 0.0;
                for (int i = 0; i < n; ++i) {
                    double acc = (H.diag[i] - lambda) * v[i];
                    if (i > 0) acc += H.off_diag * v[i - 1];
                    if (i + 1 < n) acc += H.off_diag * v[i + 1];
                    rss += acc * acc;
                }
                residual = std::sqrt(rss);
                if (residual <= residual_tol) break;
            }
        }
        if (residual > residual_tol)
            throw SolverError("eigensolve: inverse iteration failed to converge", k);

        // Deterministic sign: make the first component of visible magnitude positive.
        for (int i = 0; i < n; ++i) {
            if (std::abs(v[i]) > 1e-8) {
                if (v[i] < 0.0)
                    for (auto& x : v) x = -x;
                break;
            }
        }
        accepted.push_back(v);

        // Rescale to unit trapezoid norm for the returned state.
        std::vector<Complex> values(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) values[i] = v[i] / std::sqrt(h);
        WaveFunction state(H.grid, std::move(values));
        const double nrm = state.norm();
        for (auto& c : state.values) c /= nrm;
        pairs.push_back({lambda, std::move(state)});
    }
    return pairs;
}

WaveFunction gaussian_packet(const Grid1D& grid, double x0, double sigma, double k0) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_packet: sigma must be positive");
    if (x0 - 8.0 * sigma < grid.x_min || x0 + 8.0 * sigma > grid.x_max)
        throw DomainTooSmallError("gaussian_packet: grid must cover x0 +- 8 sigma");
    std::vector<Complex> values(static_cast<std::size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.node(i);
        const double dx = x - x0;
        values[i] = std::polar(std::exp(-dx * dx / (4.0 * sigma * sigma)), k0 * x);
    }
    WaveFunction psi(grid, std::move(values));
    const double nrm = psi.norm();
    for (auto& c : psi.values) c /= nrm;
    return psi;
}

namespace {

// Crank-Nicolson workspace: B psi computed explicitly, A psi' = B psi solved
// by the Thomas algorithm. A = 1 + i tau H is strictly nonsingular (its
// eigenvalues are 1 + i tau lambda), so the factorization is computed once
// and each step is two substitution sweeps.
class CnWorkspace {
public:
    CnWorkspace(const HamiltonianTridiag& H, double dt)
        : n_(H.grid.n), off_a_(0.0, dt / (2.0 * H.hbar) * H.off_diag),
          diag_a_(n_), cprime_(n_), inv_denom_(n_), work_(n_) {
        const double tau = dt / (2.0 * H.hbar);
        for (int i = 0; i < n_; ++i) diag_a_[i] = Complex(1.0, tau * H.diag[i]);
        Complex denom = diag_a_[0];
        for (int i = 0; i < n_; ++i) {
            if (i > 0) denom = diag_a_[i] - off_a_ * cprime_[i - 1];
            assert(std::abs(denom) > 0.0 && "Crank-Nicolson pivot vanished");
            inv_denom_[i] = 1.0 / denom;
            cprime_[i] = off_a_ * inv_denom_[i];
        }
    }

    void step(std::vector<Complex>& psi) {
        // rhs = conj(A) psi = (1 - i tau H) psi
        const Complex off_b = std::conj(off_a_);
        Complex prev = psi[0];
        work_[0] = std::conj(diag_a_[0]) * psi[0] + off_b * psi[1];
        for (int i = 1; i < n_ - 1; ++i) {
            const Complex cur = psi[i];
            work_[i] = std::conj(diag_a_[i]) * cur + off_b * (prev + psi[i + 1]);
            prev = cur;
        }
        work_[n_ - 1] = std::conj(diag_a_[n_ - 1]) * psi[n_ - 1] + off_b * prev;

        psi[0] = work_[0] * inv_denom_[0];
        for (int i = 1; i < n_; ++i)
            psi[i] = (work_[i] - off_a_ * psi[i - 1]) * inv_denom_[i];
        for (int i = n_ - 2; i >= 0; --i) psi[i] -= cprime_[i] * psi[i + 1];
    }

private:
    int n_;
    Complex off_a_;
    std::vector<Complex> diag_a_;
    std::vector<Complex> cprime_;
    std::vector<Complex> inv_denom_;
    std::vector<Complex> work_;
};

void check_unit_norm(const WaveFunction& psi, const char* who) {
    if (std::abs(psi.norm() - 1.0) > 1e-6)
        throw NormalizationError(std::string(who) + ": input must be unit-normalized");
}

double real_expectation(const WaveFunction& psi, const std::vector<double>& weight) {
    std::vector<double> f(psi.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = weight[i] * std::norm(psi.values[i]);
    return trapezoid(psi.grid, f);
}

}  // namespace

WaveFunction cn_step(const WaveFunction& psi, const HamiltonianTridiag& H, double dt) {
    if (!(psi.grid == H.grid)) throw std::invalid_argument("cn_step: grid mismatch");
    if (dt == 0.0) return psi;
    WaveFunction out = psi;
    CnWorkspace ws(H, dt);
    ws.step(out.values);
    return out;
}

PropagationTrace propagate(const WaveFunction& psi, const HamiltonianTridiag& H, double dt,
                           long steps, int record_every) {
    if (steps < 0) throw std::invalid_argument("propagate: steps must be non-negative");
    if (record_every < 1) throw std::invalid_argument("propagate: record_every must be >= 1");
    if (!(psi.grid == H.grid)) throw std::invalid_argument("propagate: grid mismatch");

    PropagationTrace trace;
    WaveFunction current = psi;
    const auto record = [&](long step) {
        trace.times.push_back(static_cast<double>(step) * dt);
        trace.norms.push_back(current.norm());
        trace.position.push_back(expect_position(current));
        trace.momentum.push_back(expect_momentum(current, H.hbar));
        trace.grad_potential.push_back(expect_potential_gradient(current, H.potential));
        trace.energy.push_back(expect_energy(current, H));
    };
    record(0);
    if (steps == 0) return trace;

    CnWorkspace ws(H, dt);
    for (long k = 1; k <= steps; ++k) {
        ws.step(current.values);
        if (k % record_every == 0) record(k);
    }
    return trace;
}

double expect_position(const WaveFunction& psi) {
    check_unit_norm(psi, "expect_position");
    std::vector<double> x(psi.values.size());
    for (int i = 0; i < psi.grid.n; ++i) x[i] = psi.grid.node(i);
    return real_expectation(psi, x);
}

double expect_momentum(const WaveFunction& psi, double hbar) {
    return matterwave::momentum_expectation(1.0 / hbar, psi).value;
}

double expect_potential(const WaveFunction& psi, const dynamics::Potential& pot) {
    check_unit_norm(psi, "expect_potential");
    std::vector<double> u(psi.values.size());
    for (int i = 0; i < psi.grid.n; ++i) u[i] = pot.value(psi.grid.node(i));
    return real_expectation(psi, u);
}

double expect_potential_gradient(const WaveFunction& psi, const dynamics::Potential& pot) {
    check_unit_norm(psi, "expect_potential_gradient");
    std::vector<double> g(psi.values.size());
    for (int i = 0; i < psi.grid.n; ++i) g[i] = pot.gradient(psi.grid.node(i));
    return real_expectation(psi, g);
}

double expect_energy(const WaveFunction& psi, const HamiltonianTridiag& H) {
    if (!(psi.grid == H.grid)) throw std::invalid_argument("expect_energy: grid mismatch");
    check_unit_norm(psi, "expect_energy");
    const auto h_psi = apply_hamiltonian(H, psi.values);
    std::vector<Complex> f(psi.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::conj(psi.values[i]) * h_psi[i];
    return trapezoid(psi.grid, f).real();
}

double measured_width(const WaveFunction& psi) {
    check_unit_norm(psi, "measured_width");
    std::vector<double> x(psi.values.size()), x2(psi.values.size());
    for (int i = 0; i < psi.grid.n; ++i) {
        x[i] = psi.grid.node(i);
        x2[i] = x[i] * x[i];
    }
    const double mean = real_expectation(psi, x);
    const double mean_sq = real_expectation(psi, x2);
    return std::sqrt(std::max(0.0, mean_sq - mean * mean));
}

}  // namespace n2s::schrodinger
