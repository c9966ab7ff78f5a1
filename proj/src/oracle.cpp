#include "mie/oracle.hpp"

#include "mie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mie {

std::string_view to_string(Stencil s) {
    return s == Stencil::pointwise ? "pointwise" : "flux";
}

void OracleConfig::validate() const {
    if (count < 1) throw domain_error("OracleConfig: request at least one eigenvalue");
    if (count > grid.count()) throw domain_error("OracleConfig: more eigenvalues than grid nodes");
    if (!(tolerance > 0.0)) throw domain_error("OracleConfig: tolerance must be positive");
}

double effective_potential(const AnyPotential& p, int ell, int dim, double r) {
    if (!(r > 0.0)) throw domain_error("effective_potential: r must be positive");
    const double kin = hbar_of(p) * hbar_of(p) / (2.0 * mass_of(p));
    const double centrifugal = ell * (ell + dim - 2.0) + 0.25 * (dim - 1.0) * (dim - 3.0);
    return eval_potential(p, r) + kin * centrifugal / (r * r);
}

Tridiagonal build_tridiagonal(const OracleConfig& config, const AnyPotential& p, int ell, int dim) {
    config.validate();
    QuantumNumbers{0, ell, dim}.validate();
    const RadialGrid& g = config.grid;
    const std::size_t m = g.count();
    const double h = g.spacing();
    const double kin = hbar_of(p) * hbar_of(p) / (2.0 * mass_of(p));
    const double stiff = kin / (h * h);

    Tridiagonal t;
    t.diag.resize(m);
    t.offdiag.resize(m - 1);
    if (config.stencil == Stencil::pointwise) {
        for (std::size_t i = 0; i < m; ++i) t.diag[i] = 2.0 * stiff + effective_potential(p, ell, dim, g[i]);
        std::fill(t.offdiag.begin(), t.offdiag.end(), -stiff);
    } else {
        const double power = dim - 1.0;
        const double centrifugal = kin * ell * (ell + dim - 2.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double r = g[i];
            const double left = std::max(0.0, 1.0 - 0.5 * h / r);
            const double right = 1.0 + 0.5 * h / r;
            t.diag[i] = stiff * (std::pow(left, power) + std::pow(right, power)) + centrifugal / (r * r) +
                        eval_potential(p, r);
            if (i + 1 < m) {
                const double ratio = (r + 0.5 * h) / std::sqrt(r * g[i + 1]);
                t.offdiag[i] = -stiff * std::pow(ratio, power);
            }
        }
    }
    t.validate();
    return t;
}

OracleResult solve_bound_states(const AnyPotential& p, int ell, int dim, const OracleConfig& config) {
    const Tridiagonal t = build_tridiagonal(config, p, ell, dim);
    OracleResult out;
    out.eigenvalues = eigen_lowest(t, config.count, config.tolerance);
    const double threshold =
        std::min(asymptote_of(p), effective_potential(p, ell, dim, config.grid.r_max()));
    for (double e : out.eigenvalues)
        if (e < threshold) out.bound.push_back(e);
    out.bound_census = sturm_count(t, threshold);
    return out;
}

std::optional<double> origin_exponent(const AnyPotential& p, int ell, int dim) {
    double a = 0.0;
    if (!inverse_square_coefficient(p, a)) return std::nullopt;
    const double c = ell * (ell + dim - 2.0) + 0.25 * (dim - 1.0) * (dim - 3.0) +
                     2.0 * mass_of(p) * a / (hbar_of(p) * hbar_of(p));
    if (0.25 + c < 0.0) return std::nullopt;
    return 0.5 + std::sqrt(0.25 + c);
}

Stencil auto_stencil(const AnyPotential& p, int ell, int dim) {
    const auto J = origin_exponent(p, ell, dim);
    if (!J) return Stencil::pointwise;
    const bool integer = std::abs(*J - std::round(*J)) < 1e-9;
    return (*J <= 1.5 + 1e-12 && !integer) ? Stencil::flux : Stencil::pointwise;
}

RadialGrid origin_grid(Stencil stencil, double h, double r_max) {
    if (!(h > 0.0) || !(r_max > 2.0 * h)) throw domain_error("origin_grid: need 0 < 2h < r_max");
    const double first = stencil == Stencil::pointwise ? h : 0.5 * h;
    const auto m = static_cast<std::size_t>(std::ceil((r_max - first) / h)) + 1;
    return RadialGrid::with_spacing(first, h, m);
}

namespace {

// r beyond the peak of r^p e^{-eps r} where it has fallen by `factor`.
double envelope_radius(double p, double eps, double factor) {
    const double target = std::log(factor);
    const double peak = p > 0.0 ? p / eps : 0.0;
    auto drop = [&](double r) { return (p > 0.0 ? p * std::log(r / peak) : 0.0) - eps * (r - peak); };
    double lo = std::max(peak, 1e-300);
    double hi = lo + 1.0 / eps;
    while (drop(hi) > target) hi = lo + 2.0 * (hi - lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (drop(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

bool near(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::abs(b);
}

} // namespace

OracleConfig default_channel_config(const PotentialParams& p, int ell, int dim, int n_max) {
    if (n_max < 0) throw domain_error("default_channel_config: n_max must be non-negative");
    const BoundState ground = make_bound_state(p, {0, ell, dim});
    const BoundState top = make_bound_state(p, {n_max, ell, dim});
    const double h = 0.005 / ground.eps;
    const double J = top.bargmann_index();
    const double r_max = std::max((2.0 * n_max + 2.0 * top.k + 10.0) / top.eps,
                                  envelope_radius(J + n_max, top.eps, 1e-12));
    const Stencil stencil = auto_stencil(p, ell, dim);
    return OracleConfig{origin_grid(stencil, h, r_max), static_cast<std::size_t>(n_max) + 1, 1e-13, stencil};
}

OracleConfig default_numeric_config(const AnyPotential& p, int ell, int dim, int n_max) {
    if (n_max < 0) throw domain_error("default_numeric_config: n_max must be non-negative");
    double scale = 1.0;
    if (const auto* m = std::get_if<MieSystem>(&p)) {
        m->preset.validate();
        scale = m->preset.r0;
    } else {
        const auto& three = std::get<PotentialParams>(p);
        if (three.B < 0.0) scale = three.hbar * three.hbar / (three.M * -three.B);
    }
    const Stencil stencil = auto_stencil(p, ell, dim);
    const auto want = static_cast<std::size_t>(n_max) + 1;
    const double asym = asymptote_of(p);
    const double kin = hbar_of(p) * hbar_of(p) / (2.0 * mass_of(p));

    // Trial solves on growing boxes until the requested levels are bound.
    double r_max = 40.0 * scale;
    OracleResult trial;
    for (int attempt = 0; attempt < 6; ++attempt) {
        OracleConfig c{origin_grid(stencil, r_max / 4000.0, r_max), want, 1e-10, stencil};
        trial = solve_bound_states(p, ell, dim, c);
        if (trial.bound.size() == want) break;
        r_max *= 2.0;
    }
    if (trial.bound.empty())
        throw bound_state_error(ChannelStatus::no_bound_states, "no bound level found by the trial solve");
    const double eps0 = std::sqrt((asym - trial.bound.front()) / kin);
    const double eps_top = std::sqrt((asym - trial.bound.back()) / kin);
    const double J = origin_exponent(p, ell, dim).value_or(1.0);
    const double h = 0.005 / eps0;
    const double reach = std::max((2.0 * n_max + 2.0 * J + 10.0) / eps_top,
                                  envelope_radius(J + n_max, eps_top, 1e-12));
    return OracleConfig{origin_grid(stencil, h, reach), want, 1e-13, stencil};
}

OracleConfig rescale_spacing(const OracleConfig& c, double factor) {
    if (!(factor > 0.0)) throw domain_error("rescale_spacing: factor must be positive");
    const RadialGrid& g = c.grid;
    const double h = g.spacing();
    const double h2 = h * factor;
    OracleConfig out = c;
    if (near(g.r_min(), h) && c.stencil == Stencil::pointwise)
        out.grid = origin_grid(Stencil::pointwise, h2, g.r_max());
    else if (near(g.r_min(), 0.5 * h) && c.stencil == Stencil::flux)
        out.grid = origin_grid(Stencil::flux, h2, g.r_max());
    else {
        const auto m = static_cast<std::size_t>(std::ceil((g.r_max() - g.r_min()) / h2)) + 1;
        out.grid = RadialGrid::with_spacing(g.r_min(), h2, m);
    }
    out.count = std::min(out.count, out.grid.count());
    return out;
}

ConvergenceReport estimate_order(std::span<const double> spacings, std::span<const double> energies,
                                 std::optional<double> exact, double kinetic) {
    if (spacings.size() != energies.size()) throw domain_error("estimate_order: size mismatch");
    ConvergenceReport rep;
    rep.spacings.assign(spacings.begin(), spacings.end());
    rep.energies.assign(energies.begin(), energies.end());
    const std::size_t m = energies.size();
    if (exact) {
        for (double e : energies) rep.errors.push_back(std::abs(e - *exact));
    } else {
        for (std::size_t i = 0; i + 1 < m; ++i) rep.errors.push_back(std::abs(energies[i] - energies[i + 1]));
    }
    if (rep.errors.size() < 2) {
        rep.note = "fewer than two error estimates";
        return rep;
    }
    double scale = 1.0;
    for (double e : energies) scale = std::max(scale, std::abs(e));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t i = 0; i < rep.errors.size(); ++i) {
        // bisection resolves eigenvalues to about eps times the matrix norm,
        // which the kinetic term dominates on fine grids
        const double h = spacings[exact ? i : i + 1];
        const double floor = 64.0 * eps * scale + 8.0 * eps * kinetic / (h * h);
        if (rep.errors[i] <= floor) {
            rep.note = "error at the rounding floor";
            return rep;
        }
        if (i > 0 && !(rep.errors[i] < rep.errors[i - 1])) {
            rep.note = "error sequence is not decreasing";
            return rep;
        }
    }
    for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i)
        rep.orders.push_back(std::log(rep.errors[i] / rep.errors[i + 1]) / std::log(spacings[i] / spacings[i + 1]));
    rep.order = rep.orders.back();
    rep.status = ConvergenceStatus::converged;
    return rep;
}

ConvergenceReport convergence_study(const AnyPotential& p, int ell, int dim, const OracleConfig& base,
                                    std::size_t level, int halvings, std::optional<double> exact) {
    if (halvings < 2) throw domain_error("convergence_study: need at least two halvings");
    if (level >= base.count) throw domain_error("convergence_study: level not among requested eigenvalues");
    std::vector<double> h, e;
    for (int i = 0; i <= halvings; ++i) {
        const OracleConfig c = i == 0 ? base : rescale_spacing(base, std::ldexp(1.0, -i));
        const OracleResult r = solve_bound_states(p, ell, dim, c);
        h.push_back(c.grid.spacing());
        e.push_back(r.eigenvalues.at(level));
    }
    return estimate_order(h, e, exact, hbar_of(p) * hbar_of(p) / mass_of(p));
}

} // namespace mie
