#include "n2s/grid.hpp"

#include <cmath>

#include "n2s/errors.hpp"

namespace n2s {

namespace {

template <typename T>
T trapezoid_impl(const Grid1D& grid, const std::vector<T>& f) {
    if (static_cast<int>(f.size()) != grid.n)
        throw std::invalid_argument("trapezoid: sample count does not match grid");
    T acc = 0.5 * (f.front() + f.back());
    for (int i = 1; i + 1 < grid.n; ++i) acc += f[i];
    return acc * grid.h;
}

}  // namespace

double trapezoid(const Grid1D& grid, const std::vector<double>& f) {
    return trapezoid_impl(grid, f);
}

Complex trapezoid(const Grid1D& grid, const std::vector<Complex>& f) {
    return trapezoid_impl(grid, f);
}

WaveFunction::WaveFunction(const Grid1D& g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.n)
        throw std::invalid_argument("WaveFunction: value count does not match grid");
}

double WaveFunction::norm() const {
    std::vector<double> density(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) density[i] = std::norm(values[i]);
    return std::sqrt(trapezoid(grid, density));
}

WaveFunction WaveFunction::normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw NormalizationError("normalized: wave function has zero norm");
    WaveFunction out = *this;
    for (auto& v : out.values) v /= n;
    return out;
}

Complex inner_product(const WaveFunction& a, const WaveFunction& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("inner_product: grids differ");
    std::vector<Complex> f(a.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::conj(a.values[i]) * b.values[i];
    return trapezoid(a.grid, f);
}

}  // namespace n2s
