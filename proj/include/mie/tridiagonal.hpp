#pragma once

// Symmetric tridiagonal eigenvalues by Sturm-sequence bisection. Shared by the
// finite-difference oracle and the Gauss-Laguerre rule construction.

#include <cstddef>
#include <utility>
#include <vector>

namespace mie {

struct Tridiagonal {
    std::vector<double> diag;    // length m
    std::vector<double> offdiag; // length m - 1

    std::size_t size() const noexcept { return diag.size(); }

    /// Throws mie::domain_error on shape mismatch or non-finite entries.
    void validate() const;
};

/// Number of eigenvalues strictly below x.
///
/// Counts negative pivots of the LDL^T factorisation of T - xI:
/// q_0 = d_0 - x, q_i = d_i - x - e_{i-1}^2 / q_{i-1}. A zero pivot is
/// replaced by -pivmin so the recurrence never divides by zero and the
/// count stays monotone in x.
std::size_t sturm_count(const Tridiagonal& t, double x);

/// Gershgorin interval [lo, hi] containing every eigenvalue.
std::pair<double, double> gershgorin_bounds(const Tridiagonal& t);

/// The `count` smallest eigenvalues in increasing order, each bracketed until
/// the bracket width is below max(tolerance, 4 ulp). tolerance = 0 means
/// bisect to machine precision.
std::vector<double> eigen_lowest(const Tridiagonal& t, std::size_t count, double tolerance = 0.0);

} // namespace mie
