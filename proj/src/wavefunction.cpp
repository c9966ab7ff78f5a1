#include "mie/wavefunction.hpp"

#include "mie/errors.hpp"
#include "mie/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mie {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

SignedLog signed_log(double v) {
    if (v == 0.0) return {neg_inf, 0};
    return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

void require_radius(double r) {
    if (!(r > 0.0)) throw domain_error("radial function: r must be positive, got " + std::to_string(r));
}

void require_same_channel(const BoundState& a, const BoundState& b) {
    if (!(a.params == b.params) || a.q.ell != b.q.ell || a.q.dim != b.q.dim)
        throw domain_error("overlap: states must share potential, ell and N");
}

} // namespace

double SignedLog::value() const {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

double log_norm_constant(const BoundState& s, NormalizationForm form) {
    const double a = s.alpha;
    const int n = s.q.n;
    const double last = form == NormalizationForm::corrected ? std::log(2.0 * n + a + 1.0)
                                                             : ln_gamma(2.0 * n + a + 2.0);
    return 0.5 * (a + 2.0) * std::log(2.0 * s.eps) - ln_gamma(a + 1.0) +
           0.5 * (ln_gamma(n + a + 1.0) - ln_gamma(n + 1.0) - last);
}

double norm_constant(const BoundState& s, NormalizationForm form) {
    return std::exp(log_norm_constant(s, form));
}

double log_eta(const BoundState& s) {
    const int n = s.q.n;
    return s.log_zeta - s.power() * std::log(2.0 * s.eps) + ln_gamma(n + 1.0) + ln_gamma(s.alpha + 1.0) -
           ln_gamma(n + s.alpha + 1.0);
}

SignedLog log_radial(const BoundState& s, double r) {
    require_radius(r);
    const SignedLog f = signed_log(kummer_poly(s.q.n, s.alpha + 1.0, 2.0 * s.eps * r));
    if (f.sign == 0) return f;
    return {s.log_zeta + s.power() * std::log(r) - s.eps * r + f.log_abs, f.sign};
}

double eval_radial(const BoundState& s, double r) {
    return log_radial(s, r).value();
}

SignedLog log_radial_laguerre(const BoundState& s, double r) {
    require_radius(r);
    const double y = 2.0 * s.eps * r;
    const SignedLog l = signed_log(laguerre(s.q.n, s.alpha, y));
    if (l.sign == 0) return l;
    return {log_eta(s) + s.power() * std::log(y) - 0.5 * y + l.log_abs, l.sign};
}

double eval_radial_laguerre(const BoundState& s, double r) {
    return log_radial_laguerre(s, r).value();
}

double eval_radial_y(const BoundState& s, double y) {
    return eval_radial_laguerre(s, y / (2.0 * s.eps));
}

double radial_y_derivative(const BoundState& s, double y) {
    if (!(y > 0.0)) throw domain_error("radial_y_derivative: y must be positive");
    // d/dy [eta y^p e^{-y/2} L] = eta y^p e^{-y/2} [ (p/y - 1/2) L + L' ]
    const double p = s.power();
    const double l = laguerre(s.q.n, s.alpha, y);
    const double dl = laguerre_derivative(s.q.n, s.alpha, y);
    const double bracket = (p / y - 0.5) * l + dl;
    if (bracket == 0.0) return 0.0;
    const double log_env = log_eta(s) + p * std::log(y) - 0.5 * y;
    return std::exp(log_env + std::log(std::abs(bracket))) * (bracket > 0.0 ? 1.0 : -1.0);
}

SampledFunction sample_radial(const BoundState& s, const RadialGrid& grid) {
    return SampledFunction::sample(grid, [&](double r) { return eval_radial(s, r); });
}

double norm_check(const BoundState& s, int order) {
    const int m = order > 0 ? order : default_quadrature_order(s.q.n);
    const double w = s.alpha + 1.0;
    const QuadratureRule rule = gauss_laguerre(m, w);
    const double two_eps = 2.0 * s.eps;
    const int dim = s.q.dim;
    return rule.integrate([&](double y) {
        const double r = y / two_eps;
        const SignedLog v = log_radial(s, r);
        if (v.sign == 0) return 0.0;
        // R^2 r^{N-1} dr/dy divided by the weight y^w e^{-y}
        return std::exp(2.0 * v.log_abs + (dim - 1) * std::log(r) - std::log(two_eps) - w * std::log(y) + y);
    });
}

namespace {

double r_space_overlap(const BoundState& a, const BoundState& b) {
    const double sigma = a.eps + b.eps;
    const double w = a.alpha + 1.0;
    const int dim = a.q.dim;
    const QuadratureRule rule = gauss_laguerre(default_quadrature_order(std::max(a.q.n, b.q.n)), w);
    return rule.integrate([&](double x) {
        const double r = x / sigma;
        const SignedLog ra = log_radial(a, r);
        const SignedLog rb = log_radial(b, r);
        if (ra.sign == 0 || rb.sign == 0) return 0.0;
        return ra.sign * rb.sign *
               std::exp(ra.log_abs + rb.log_abs + (dim - 1) * std::log(r) - std::log(sigma) - w * std::log(x) + x);
    });
}

// int R_a(y) R_b(y) y^{N-1-drop} dy with each state evaluated at its own
// r = y / (2 eps).
double y_space_integral(const BoundState& a, const BoundState& b, int drop) {
    const double w = a.alpha + 1.0 - drop;
    const int dim = a.q.dim;
    const QuadratureRule rule = gauss_laguerre(default_quadrature_order(std::max(a.q.n, b.q.n)), w);
    return rule.integrate([&](double y) {
        const SignedLog ra = log_radial_laguerre(a, y / (2.0 * a.eps));
        const SignedLog rb = log_radial_laguerre(b, y / (2.0 * b.eps));
        if (ra.sign == 0 || rb.sign == 0) return 0.0;
        return ra.sign * rb.sign * std::exp(ra.log_abs + rb.log_abs + (dim - 1 - drop) * std::log(y) - w * std::log(y) + y);
    });
}

} // namespace

double overlap(const BoundState& a, const BoundState& b, OverlapMeasure measure) {
    require_same_channel(a, b);
    if (measure == OverlapMeasure::r_space) return r_space_overlap(a, b);
    const int drop = measure == OverlapMeasure::y_jacobian ? 0 : 1;
    const double ab = y_space_integral(a, b, drop);
    const double aa = y_space_integral(a, a, drop);
    const double bb = y_space_integral(b, b, drop);
    return ab / std::sqrt(aa * bb);
}

double measure_norm(const BoundState& s, OverlapMeasure measure) {
    if (measure == OverlapMeasure::r_space) return std::sqrt(norm_check(s));
    return std::sqrt(y_space_integral(s, s, measure == OverlapMeasure::y_jacobian ? 0 : 1));
}

ResidualReport ode_residual(const BoundState& s, const SampledFunction& f) {
    const RadialGrid& g = f.grid;
    const double h = g.spacing();
    if (h * h * s.eps * s.eps > 0.1)
        throw resolution_error("ode_residual: grid too coarse (h^2 eps^2 > 0.1)");
    if (g.count() < 5) throw resolution_error("ode_residual: need at least 5 nodes");

    const RadialGrid inner = g.interior(2);
    std::vector<double> res(inner.count());
    const auto& v = f.values;
    const double dim = s.q.dim;
    const double eps2 = s.eps * s.eps;
    double max_res = 0.0;
    double max_scale = 0.0;
    for (std::size_t j = 0; j < inner.count(); ++j) {
        const std::size_t i = j + 2;
        const double r = g[i];
        const double d2 = (-v[i + 2] + 16.0 * v[i + 1] - 30.0 * v[i] + 16.0 * v[i - 1] - v[i - 2]) / (12.0 * h * h);
        const double d1 = (-v[i + 2] + 8.0 * v[i + 1] - 8.0 * v[i - 1] + v[i - 2]) / (12.0 * h);
        const double terms[5] = {d2, (dim - 1.0) / r * d1, -s.nu_product / (r * r) * v[i], -eps2 * v[i],
                                 s.beta / r * v[i]};
        double sum = 0.0;
        for (double t : terms) {
            sum += t;
            max_scale = std::max(max_scale, std::abs(t));
        }
        res[j] = sum;
        max_res = std::max(max_res, std::abs(sum));
    }
    return {SampledFunction(inner, std::move(res)), max_scale == 0.0 ? 0.0 : max_res / max_scale};
}

ResidualReport ode_residual(const BoundState& s, const RadialGrid& grid) {
    return ode_residual(s, sample_radial(s, grid));
}

ResidualConvergence residual_convergence(const BoundState& s, const RadialGrid& fine, int halvings) {
    if (halvings < 1) throw domain_error("residual_convergence: need at least one halving");
    const std::size_t cells = (fine.count() - 1) >> halvings;
    if (cells < 8) throw domain_error("residual_convergence: fine grid too small for the requested halvings");
    ResidualConvergence out;
    for (int level = 0; level <= halvings; ++level) {
        const std::size_t step = std::size_t{1} << level;
        const RadialGrid g(fine.r_min(), fine.r_max(), cells * step + 1);
        const ResidualReport rep = ode_residual(s, g);
        // coarse node J sits at full index J * step, i.e. J * step - 2 after trimming
        double worst = 0.0;
        for (std::size_t J = 2; J + 2 <= cells; ++J)
            worst = std::max(worst, std::abs(rep.residual.values[J * step - 2]));
        out.spacings.push_back(g.spacing());
        out.residuals.push_back(worst);
    }
    for (std::size_t i = 0; i + 1 < out.residuals.size(); ++i)
        out.orders.push_back(std::log2(out.residuals[i] / out.residuals[i + 1]));
    return out;
}

double decay_y(const BoundState& s, double factor) {
    if (!(factor > 0.0 && factor < 1.0)) throw domain_error("decay_y: factor must lie in (0, 1)");
    const double p = std::max(0.0, s.power() + s.q.n);
    const double target = std::log(factor);
    const double peak = 2.0 * p;
    auto drop = [&](double y) { return (p > 0.0 ? p * std::log(y / peak) : 0.0) - 0.5 * (y - peak); };
    double lo = std::max(peak, 1e-300);
    double hi = lo + 2.0;
    while (drop(hi) > target) hi = lo + 2.0 * (hi - lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (drop(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

RadialGrid default_residual_grid(const BoundState& s) {
    constexpr double y_lo = 0.2;
    constexpr double hy = 0.01;
    const double y_hi = std::max(decay_y(s, 1e-12), y_lo + 100.0 * hy);
    const auto count = static_cast<std::size_t>(std::ceil((y_hi - y_lo) / hy)) + 1;
    const double two_eps = 2.0 * s.eps;
    return RadialGrid::with_spacing(y_lo / two_eps, hy / two_eps, count);
}

int count_sign_changes(std::span<const double> values) {
    int changes = 0;
    int last = 0;
    for (double v : values) {
        const int sg = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

int node_count(const BoundState& s) {
    const double y_hi = decay_y(s, 1e-12);
    constexpr std::size_t count = 20000;
    const RadialGrid g(1e-6 / (2.0 * s.eps), y_hi / (2.0 * s.eps), count);
    std::vector<double> signs(count);
    for (std::size_t i = 0; i < count; ++i) signs[i] = log_radial(s, g[i]).sign;
    return count_sign_changes(signs);
}

} // namespace mie
