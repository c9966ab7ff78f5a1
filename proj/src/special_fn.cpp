#include "mie/special_fn.hpp"

#include "mie/errors.hpp"
#include "mie/tridiagonal.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mie {

namespace {

// B_{2j} / (2j (2j - 1)), j = 1..12.
constexpr std::array<long double, 12> stirling_coeffs = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
    77683.0L / 5796.0L,
    -236364091.0L / 1506960.0L,
};

constexpr long double half_ln_two_pi = 0.918938533204672741780329736405617639861L;

void check_laguerre_args(int n, double alpha) {
    if (n < 0) throw domain_error("laguerre: degree must be non-negative");
    if (!(alpha > -1.0)) throw domain_error("laguerre: alpha must exceed -1");
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("ln_gamma: argument must be positive and finite, got " + std::to_string(x));
    if (x == 1.0 || x == 2.0) return 0.0;

    long double z = x;
    long double shift = 1.0L;
    while (z < 10.0L) {
        shift *= z;
        z += 1.0L;
    }
    const long double inv = 1.0L / z;
    const long double inv2 = inv * inv;
    long double series = 0.0L;
    long double p = inv;
    for (long double c : stirling_coeffs) {
        series += c * p;
        p *= inv2;
    }
    const long double lg = (z - 0.5L) * std::log(z) - z + half_ln_two_pi + series;
    return static_cast<double>(lg - std::log(shift));
}

double laguerre(int n, double alpha, double x) {
    check_laguerre_args(n, alpha);
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + alpha + 1.0 - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre_derivative(int n, double alpha, double x) {
    check_laguerre_args(n, alpha);
    return n == 0 ? 0.0 : -laguerre(n - 1, alpha + 1.0, x);
}

double kummer_poly(int n, double b, double x) {
    if (n < 0) throw domain_error("kummer_poly: n must be non-negative");
    if (!(b > 0.0)) throw domain_error("kummer_poly: b must be positive");
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < n; ++j) {
        term *= (j - n) / (b + j) * x / (j + 1.0);
        sum += term;
    }
    return sum;
}

QuadratureRule gauss_laguerre(int m, double alpha) {
    if (m < 1) throw domain_error("gauss_laguerre: order must be at least 1");
    if (!(alpha > -1.0)) throw domain_error("gauss_laguerre: alpha must exceed -1");

    Tridiagonal jacobi;
    jacobi.diag.resize(m);
    jacobi.offdiag.resize(m - 1);
    for (int j = 0; j < m; ++j) jacobi.diag[j] = 2.0 * j + alpha + 1.0;
    for (int j = 0; j + 1 < m; ++j) jacobi.offdiag[j] = std::sqrt((j + 1.0) * (j + 1.0 + alpha));

    QuadratureRule rule;
    rule.order = m;
    rule.alpha = alpha;
    rule.nodes = eigen_lowest(jacobi, static_cast<std::size_t>(m));
    rule.weights.resize(m);

    const double mu0 = std::exp(ln_gamma(alpha + 1.0));
    for (int i = 0; i < m; ++i) {
        const double x = rule.nodes[i];
        // Eigenvector components follow the orthonormal recurrence; only the
        // ratio v_0^2 / |v|^2 is needed, so rescale freely against overflow.
        double v0sq = 1.0;
        double prev = 0.0;
        double cur = 1.0;
        double norm = 1.0;
        for (int j = 0; j + 1 < m; ++j) {
            const double back = j > 0 ? jacobi.offdiag[j - 1] * prev : 0.0;
            const double next = ((x - jacobi.diag[j]) * cur - back) / jacobi.offdiag[j];
            prev = cur;
            cur = next;
            norm += cur * cur;
            if (norm > 1e200) {
                constexpr double s = 1e-100;
                prev *= s;
                cur *= s;
                norm *= s * s;
                v0sq *= s * s;
            }
        }
        rule.weights[i] = mu0 * v0sq / norm;
    }
    return rule;
}

} // namespace mie
