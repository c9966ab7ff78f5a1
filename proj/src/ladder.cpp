#include "mie/ladder.hpp"

#include "mie/errors.hpp"
#include "mie/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mie {

namespace {

double checked_sqrt(double radicand, const char* what, int n) {
    if (!(radicand >= 0.0))
        throw algebra_violation(std::string(what) + ": negative radicand at n = " + std::to_string(n));
    return std::sqrt(radicand);
}

void require_positive_denominator(int n, double k, int dim) {
    if (!(2.0 * n + 2.0 * k + 3.0 - dim > 0.0))
        throw algebra_violation("ladder: 2n + 2k + 3 - N must be positive at n = " + std::to_string(n));
}

// Dense square matrix on the truncated basis.
struct Matrix {
    std::size_t size;
    std::vector<double> a;

    explicit Matrix(std::size_t m) : size(m), a(m * m, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * size + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * size + j]; }
};

Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix z(x.size);
    for (std::size_t i = 0; i < x.size; ++i)
        for (std::size_t l = 0; l < x.size; ++l) {
            const double xil = x(i, l);
            if (xil == 0.0) continue;
            for (std::size_t j = 0; j < x.size; ++j) z(i, j) += xil * y(l, j);
        }
    return z;
}

Matrix combine(const Matrix& x, double s, const Matrix& y) {
    Matrix z(x.size);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + s * y.a[i];
    return z;
}

Matrix commutator(const Matrix& x, const Matrix& y) {
    return combine(x * y, -1.0, y * x);
}

// max over columns j <= last_col of |x - y|, relative to max(1, max |y|).
double column_residual(const Matrix& x, const Matrix& y, std::size_t last_col) {
    double diff = 0.0, scale = 1.0;
    for (std::size_t i = 0; i < x.size; ++i)
        for (std::size_t j = 0; j <= last_col; ++j) {
            diff = std::max(diff, std::abs(x(i, j) - y(i, j)));
            scale = std::max(scale, std::abs(y(i, j)));
        }
    return diff / scale;
}

struct Generators {
    Matrix plus, minus, zero;
};

Generators build_generators(double k, int dim, int n_max) {
    const std::size_t m = static_cast<std::size_t>(n_max) + 1;
    Generators g{Matrix(m), Matrix(m), Matrix(m)};
    const double J = bargmann_index(k, dim);
    for (std::size_t n = 0; n < m; ++n) {
        const int ni = static_cast<int>(n);
        g.zero(n, n) = ni + J;
        if (n + 1 < m) g.plus(n + 1, n) = lambda_plus(ni, k, dim);
        if (n > 0) g.minus(n - 1, n) = lambda_minus(ni, k, dim);
    }
    return g;
}

double relative(double value, double expected) {
    return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

} // namespace

double lambda_minus(int n, double k, int dim) {
    if (n < 0) throw algebra_violation("lambda_minus: n must be non-negative");
    require_positive_denominator(n, k, dim);
    if (n == 0) return 0.0;
    const double radicand = n * (n + 2.0 * k + 2.0 - dim) * (2.0 * n + 1.0 + 2.0 * k - dim) /
                            (2.0 * n + 2.0 * k + 3.0 - dim);
    return checked_sqrt(radicand, "lambda_minus", n);
}

double lambda_plus(int n, double k, int dim) {
    if (n < 0) throw algebra_violation("lambda_plus: n must be non-negative");
    require_positive_denominator(n, k, dim);
    const double radicand = (n + 1.0) * (n + 2.0 * k + 3.0 - dim) * (2.0 * n + 2.0 * k + 5.0 - dim) /
                            (2.0 * n + 2.0 * k + 3.0 - dim);
    return checked_sqrt(radicand, "lambda_plus", n);
}

double lambda_zero(int n, double k, int dim) {
    return 2.0 * n + 2.0 * k - dim + 3.0;
}

double bargmann_index(double k, int dim) {
    return k + 0.5 * (3.0 - dim);
}

LadderCoeffs ladder_coeffs(int n, double k, int dim) {
    return {k, dim, n, lambda_minus(n, k, dim), lambda_plus(n, k, dim), lambda_zero(n, k, dim),
            bargmann_index(k, dim)};
}

double CommutatorReport::max_residual() const {
    double m = std::max({minus_plus, zero_plus, minus_zero, zero_a, zero_s});
    for (const auto& r : rows) m = std::max(m, r.residual);
    return m;
}

CommutatorReport commutator_check(double k, int dim, int n_max) {
    if (n_max < 2) throw domain_error("commutator_check: n_max must be at least 2");
    CommutatorReport rep;
    rep.k = k;
    rep.dim = dim;
    rep.n_max = n_max;
    try {
        for (int n = 0; n <= n_max; ++n) {
            const double up = lambda_plus(n, k, dim) * lambda_minus(n + 1, k, dim);
            const double down = n > 0 ? lambda_minus(n, k, dim) * lambda_plus(n - 1, k, dim) : 0.0;
            CommutatorRow row{n, up - down, lambda_zero(n, k, dim), 0.0};
            row.residual = relative(row.lhs, row.lambda_zero);
            if (!(row.residual <= 1e-12))
                rep.violations.push_back("[L-,L+] coefficient identity fails at n = " + std::to_string(n));
            rep.rows.push_back(row);
        }

        const Generators g = build_generators(k, dim, n_max);
        const auto last = static_cast<std::size_t>(n_max - 1);
        const Matrix two_zero = combine(g.zero, 1.0, g.zero);
        const Matrix la = combine(g.plus, 1.0, g.minus);
        const Matrix ls = combine(g.plus, -1.0, g.minus);
        rep.minus_plus = column_residual(commutator(g.minus, g.plus), two_zero, last);
        rep.zero_plus = column_residual(commutator(g.zero, g.plus), g.plus, last);
        rep.minus_zero = column_residual(commutator(g.minus, g.zero), g.minus, last);
        rep.zero_a = column_residual(commutator(g.zero, la), ls, last);
        rep.zero_s = column_residual(commutator(g.zero, ls), la, last);
    } catch (const algebra_violation& e) {
        rep.violations.emplace_back(e.what());
    }
    return rep;
}

double CasimirReport::max_residual() const {
    double m = off_diagonal;
    for (const auto& r : rows) m = std::max(m, r.residual);
    return m;
}

CasimirReport casimir_check(double k, int dim, int n_max) {
    if (n_max < 1) throw domain_error("casimir_check: n_max must be at least 1");
    CasimirReport rep;
    rep.k = k;
    rep.dim = dim;
    rep.n_max = n_max;
    rep.J = bargmann_index(k, dim);
    rep.expected = rep.J * (rep.J - 1.0);
    try {
        const Generators g = build_generators(k, dim, n_max);
        const std::size_t m = g.zero.size;
        Matrix id(m);
        for (std::size_t i = 0; i < m; ++i) id(i, i) = 1.0;
        const Matrix lowered = combine(g.zero * combine(g.zero, -1.0, id), -1.0, g.plus * g.minus);
        const Matrix raised = combine(g.zero * combine(g.zero, 1.0, id), -1.0, g.minus * g.plus);
        for (std::size_t n = 0; n < m; ++n) {
            CasimirRow row;
            row.n = static_cast<int>(n);
            row.lowered = lowered(n, n);
            row.residual = relative(row.lowered, rep.expected);
            if (n + 1 < m) {
                row.raised = raised(n, n);
                row.residual = std::max(row.residual, relative(*row.raised, rep.expected));
            }
            if (!(row.residual <= 1e-12))
                rep.violations.push_back("Casimir eigenvalue mismatch at n = " + std::to_string(n));
            rep.rows.push_back(row);
            for (std::size_t j = 0; j < m; ++j)
                if (j != n) rep.off_diagonal = std::max(rep.off_diagonal, std::abs(lowered(n, j)));
        }
    } catch (const algebra_violation& e) {
        rep.violations.emplace_back(e.what());
    }
    return rep;
}

RadialGrid default_ladder_grid(const BoundState& state) {
    const BoundState next = make_bound_state(state.params, {state.q.n + 1, state.q.ell, state.q.dim});
    const double y_hi = std::max(decay_y(next, 1e-12), 10.0);
    return RadialGrid(0.05, y_hi, 4000);
}

namespace {

std::vector<double> sample_y(const BoundState& s, const RadialGrid& grid) {
    std::vector<double> v(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i) v[i] = eval_radial_y(s, grid[i]);
    return v;
}

// Fit the image against the neighbouring state in three normalisations.
void fit_against(LadderApplication& app, const BoundState& state, const BoundState& neighbour,
                 const RadialGrid& grid) {
    const std::vector<double> target = sample_y(neighbour, grid);
    app.fitted = fit_proportional(app.result.values, target);
    app.residual = proportionality_residual(app.result.values, target, app.fitted);
    for (auto measure : {OverlapMeasure::y_jacobian, OverlapMeasure::y_laguerre}) {
        const double rescaled =
            app.fitted * measure_norm(neighbour, measure) / measure_norm(state, measure);
        (measure == OverlapMeasure::y_jacobian ? app.fitted_y_jacobian : app.fitted_y_laguerre) = rescaled;
    }
}

} // namespace

LadderApplication apply_minus_differential(const BoundState& state, const RadialGrid& grid_y) {
    const int n = state.q.n;
    const int dim = state.q.dim;
    const double k = state.k;
    const double shift = k + n + 2.0 - dim;
    auto image = [&](double y) {
        return -y * radial_y_derivative(state, y) + (shift - 0.5 * y) * eval_radial_y(state, y);
    };
    LadderApplication app{SampledFunction::sample(grid_y, image), 0.0, 0.0, 0.0, {}, {}, {}, {}};
    app.closed_form = lambda_minus(n, k, dim);
    if (n == 0) {
        const double scale = SampledFunction(grid_y, sample_y(state, grid_y)).max_abs();
        app.residual = scale == 0.0 ? 0.0 : app.result.max_abs() / scale;
        return app;
    }
    const BoundState lower = make_bound_state(state.params, {n - 1, state.q.ell, dim});
    fit_against(app, state, lower, grid_y);
    const double eta_ratio = std::exp(log_eta(state) - log_eta(lower));
    app.printed = (n + k + 2.0 - dim) * eta_ratio;
    app.recurrence = (n + state.alpha) * eta_ratio;
    return app;
}

LadderApplication apply_plus_differential(const BoundState& state, const RadialGrid& grid_y) {
    const int n = state.q.n;
    const int dim = state.q.dim;
    const double k = state.k;
    auto image = [&](double y) {
        return y * radial_y_derivative(state, y) + (n + k + 1.0 - 0.5 * y) * eval_radial_y(state, y);
    };
    LadderApplication app{SampledFunction::sample(grid_y, image), 0.0, 0.0, 0.0, {}, {}, {}, {}};
    app.closed_form = lambda_plus(n, k, dim);
    const BoundState upper = make_bound_state(state.params, {n + 1, state.q.ell, dim});
    fit_against(app, state, upper, grid_y);
    app.recurrence = (n + 1.0) * std::exp(log_eta(state) - log_eta(upper));
    return app;
}

namespace {

template <class Coefficient>
SampledFunction apply_first_order(const SampledFunction& f, double sign, Coefficient&& coefficient) {
    const RadialGrid& g = f.grid;
    if (g.count() < 5) throw resolution_error("ladder: need at least 5 samples");
    const RadialGrid inner = g.interior(2);
    const double h = g.spacing();
    const auto& v = f.values;
    std::vector<double> out(inner.count());
    for (std::size_t j = 0; j < inner.count(); ++j) {
        const std::size_t i = j + 2;
        const double y = g[i];
        const double d1 = (-v[i + 2] + 8.0 * v[i + 1] - 8.0 * v[i - 1] + v[i - 2]) / (12.0 * h);
        out[j] = sign * y * d1 + coefficient(y) * v[i];
    }
    return {inner, std::move(out)};
}

} // namespace

SampledFunction apply_lowering(const SampledFunction& f, int n, double k, int dim) {
    const double shift = k + n + 2.0 - dim;
    return apply_first_order(f, -1.0, [&](double y) { return shift - 0.5 * y; });
}

SampledFunction apply_raising(const SampledFunction& f, int n, double k, int /*dim*/) {
    const double shift = n + k + 1.0;
    return apply_first_order(f, 1.0, [&](double y) { return shift - 0.5 * y; });
}

} // namespace mie
