#include "mie/grid.hpp"

#include "mie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mie {

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t count)
    : r_min_(r_min), r_max_(r_max), count_(count), h_(0.0) {
    if (!(r_min > 0.0) || !std::isfinite(r_min))
        throw domain_error("RadialGrid: r_min must be positive, got " + std::to_string(r_min));
    if (!(r_max > r_min) || !std::isfinite(r_max))
        throw domain_error("RadialGrid: r_max must exceed r_min");
    if (count < 3)
        throw domain_error("RadialGrid: need at least 3 nodes");
    h_ = (r_max - r_min) / static_cast<double>(count - 1);
}

RadialGrid RadialGrid::with_spacing(double r_min, double h, std::size_t count) {
    if (!(h > 0.0)) throw domain_error("RadialGrid: spacing must be positive");
    RadialGrid g(r_min, r_min + h * static_cast<double>(count - 1), count);
    g.h_ = h;
    return g;
}

std::vector<double> RadialGrid::nodes() const {
    std::vector<double> r(count_);
    for (std::size_t i = 0; i < count_; ++i) r[i] = (*this)[i];
    return r;
}

RadialGrid RadialGrid::interior(std::size_t trim) const {
    if (count_ < 2 * trim + 3) throw domain_error("RadialGrid: too few nodes to trim");
    RadialGrid g = with_spacing((*this)[trim], h_, count_ - 2 * trim);
    g.r_max_ = (*this)[count_ - 1 - trim];
    return g;
}

SampledFunction::SampledFunction(RadialGrid g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.count())
        throw domain_error("SampledFunction: one value per grid node required");
}

double SampledFunction::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double fit_proportional(std::span<const double> f, std::span<const double> g) {
    if (f.size() != g.size()) throw domain_error("fit_proportional: size mismatch");
    // Rescale to keep the sums finite for widely varying magnitudes.
    double sf = 0.0, sg = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        sf = std::max(sf, std::abs(f[i]));
        sg = std::max(sg, std::abs(g[i]));
    }
    if (sg == 0.0 || sf == 0.0) return 0.0;
    double fg = 0.0, gg = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = f[i] / sf, b = g[i] / sg;
        fg += a * b;
        gg += b * b;
    }
    return fg / gg * (sf / sg);
}

double proportionality_residual(std::span<const double> f, std::span<const double> g, double c) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        num = std::max(num, std::abs(f[i] - c * g[i]));
        den = std::max(den, std::abs(f[i]));
    }
    return den == 0.0 ? 0.0 : num / den;
}

} // namespace mie
