#pragma once

#include <cstddef>
#include <vector>

namespace mie {

/// ln Gamma(x) for x > 0. Shifts the argument up to x >= 10 with the
/// functional equation, then sums the Stirling series
///   (x - 1/2) ln x - x + ln(2 pi)/2 + sum_j B_{2j} / (2j (2j-1) x^{2j-1}),
/// j = 1..12, in extended precision. Throws mie::domain_error for x <= 0.
double ln_gamma(double x);

/// Associated Laguerre polynomial L_n^alpha(x) by forward three-term
/// recurrence. Requires n >= 0 and alpha > -1.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
double laguerre_derivative(int n, double alpha, double x);

/// Terminating confluent hypergeometric series 1F1(-n; b; x), n + 1 terms.
/// Throws mie::domain_error for b <= 0 or n < 0.
double kummer_poly(int n, double b, double x);

/// Generalised Gauss-Laguerre rule for the weight x^alpha e^{-x} on (0, inf).
struct QuadratureRule {
    std::vector<double> nodes;   // strictly increasing, positive
    std::vector<double> weights; // positive, sum = Gamma(alpha + 1)
    int order = 0;
    double alpha = 0.0;

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// m-point rule (Golub-Welsch): nodes are the eigenvalues of the Jacobi
/// matrix of the Laguerre recurrence, weights Gamma(alpha+1) v_0^2 with v the
/// normalised eigenvector. Requires m >= 1, alpha > -1.
QuadratureRule gauss_laguerre(int m, double alpha);

/// Node count used for normalisation integrals up to radial index n_max.
constexpr int default_quadrature_order(int n_max) { return 4 * (n_max + 1) + 20; }

} // namespace mie
