#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mie {

/// Uniform grid on [r_min, r_max] with r_min > 0.
class RadialGrid {
public:
    /// Throws mie::domain_error unless 0 < r_min < r_max and count >= 3.
    RadialGrid(double r_min, double r_max, std::size_t count);

    /// Grid with spacing h starting at r_min; r_max = r_min + (count-1) h.
    static RadialGrid with_spacing(double r_min, double h, std::size_t count);

    double r_min() const noexcept { return r_min_; }
    double r_max() const noexcept { return r_max_; }
    std::size_t count() const noexcept { return count_; }
    double spacing() const noexcept { return h_; }

    double operator[](std::size_t i) const noexcept {
        return i + 1 == count_ ? r_max_ : r_min_ + static_cast<double>(i) * h_;
    }
    std::vector<double> nodes() const;

    /// Grid without the first and last `trim` nodes.
    RadialGrid interior(std::size_t trim) const;

    friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

private:
    double r_min_;
    double r_max_;
    std::size_t count_;
    double h_;
};

struct SampledFunction {
    RadialGrid grid;
    std::vector<double> values;

    SampledFunction(RadialGrid g, std::vector<double> v);

    template <class F>
    static SampledFunction sample(const RadialGrid& g, F&& f) {
        std::vector<double> v(g.count());
        for (std::size_t i = 0; i < g.count(); ++i) v[i] = f(g[i]);
        return {g, std::move(v)};
    }

    double max_abs() const;
};

/// Least-squares c minimising |f - c g|; returns 0 when g vanishes.
double fit_proportional(std::span<const double> f, std::span<const double> g);

/// max_i |f_i - c g_i| / max_i |f_i| (0 when f vanishes).
double proportionality_residual(std::span<const double> f, std::span<const double> g, double c);

} // namespace mie
