#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace n2s {

using Complex = std::complex<double>;

/// Uniform 1D grid with n >= 3 nodes, node(0) = x_min and node(n-1) = x_max.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int n = 3;
    double h = 0.5;

    Grid1D() = default;
    Grid1D(double x_min_, double x_max_, int n_)
        : x_min(x_min_), x_max(x_max_), n(n_), h((x_max_ - x_min_) / (n_ - 1)) {
        if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
        if (n < 3) throw std::invalid_argument("Grid1D: need at least 3 nodes");
    }

    double node(int i) const { return x_min + i * h; }

    bool operator==(const Grid1D&) const = default;
};

/// Trapezoid quadrature of nodal samples.
double trapezoid(const Grid1D& grid, const std::vector<double>& f);
Complex trapezoid(const Grid1D& grid, const std::vector<Complex>& f);

/// Complex samples on a grid. Quadrature convention is the trapezoid rule.
struct WaveFunction {
    Grid1D grid;
    std::vector<Complex> values;

    WaveFunction() = default;
    WaveFunction(const Grid1D& g, std::vector<Complex> v);

    /// sqrt of the trapezoid quadrature of |psi|^2.
    double norm() const;

    /// Copy rescaled so norm() == 1.
    WaveFunction normalized() const;
};

/// Trapezoid quadrature of conj(a) * b. Grids must match.
Complex inner_product(const WaveFunction& a, const WaveFunction& b);

}  // namespace n2s
