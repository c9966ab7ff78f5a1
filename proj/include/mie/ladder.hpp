#pragma once

// SU(1,1) ladder structure of the radial eigenfunctions in y = 2 eps r:
//   L- = -y d/dy - y/2 + k + n + 2 - N,   L+ = y d/dy - y/2 + n + k + 1,
//   L0 = n + J,  J = k + (3 - N)/2,
// with the closed-form coefficients
//   lambda-(n) = sqrt(n (n+2k+2-N)(2n+1+2k-N) / (2n+2k+3-N)),
//   lambda+(n) = sqrt((n+1)(n+2k+3-N)(2n+2k+5-N) / (2n+2k+3-N)).
// The explicit n in L+- is read as the number operator on the basis index.

#include "mie/grid.hpp"
#include "mie/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mie {

struct LadderCoeffs {
    double k = 0.0;
    int dim = 3;
    int n = 0;
    double lambda_minus = 0.0;
    double lambda_plus = 0.0;
    double lambda_zero = 0.0; // 2n + 2k - N + 3 = 2 (n + J)
    double J = 0.0;
};

/// Throws algebra_violation when 2n + 2k + 3 - N <= 0 or a radicand is negative.
double lambda_minus(int n, double k, int dim);
double lambda_plus(int n, double k, int dim);
double lambda_zero(int n, double k, int dim);
double bargmann_index(double k, int dim);

LadderCoeffs ladder_coeffs(int n, double k, int dim);

struct CommutatorRow {
    int n = 0;
    double lhs = 0.0;        // lambda+(n) lambda-(n+1) - lambda-(n) lambda+(n-1)
    double lambda_zero = 0.0;
    double residual = 0.0;   // relative
};

struct CommutatorReport {
    double k = 0.0;
    int dim = 3;
    int n_max = 0;
    std::vector<CommutatorRow> rows;
    // Matrix identities on the truncated basis {0..n_max}, columns <= n_max - 1.
    double minus_plus = 0.0; // [L-, L+] = 2 L0
    double zero_plus = 0.0;  // [L0, L+] = L+
    double minus_zero = 0.0; // [L-, L0] = L-
    double zero_a = 0.0;     // [L0, La] = Ls, La = L+ + L-
    double zero_s = 0.0;     // [L0, Ls] = La, Ls = L+ - L-
    std::vector<std::string> violations;

    double max_residual() const;
    bool passed(double tolerance = 1e-12) const { return violations.empty() && max_residual() <= tolerance; }
};

/// Requires n_max >= 2 (mie::domain_error otherwise).
CommutatorReport commutator_check(double k, int dim, int n_max);

struct CasimirRow {
    int n = 0;
    double lowered = 0.0;               // L0(L0 - 1) - L+ L-
    std::optional<double> raised;       // L0(L0 + 1) - L- L+, interior rows only
    double residual = 0.0;              // worst of the two against J(J-1)
};

struct CasimirReport {
    double k = 0.0;
    int dim = 3;
    int n_max = 0;
    double J = 0.0;
    double expected = 0.0; // J (J - 1)
    std::vector<CasimirRow> rows;
    double off_diagonal = 0.0; // largest off-diagonal Casimir entry
    std::vector<std::string> violations;

    double max_residual() const;
    bool passed(double tolerance = 1e-12) const { return violations.empty() && max_residual() <= tolerance; }
};

/// Requires n_max >= 1.
CasimirReport casimir_check(double k, int dim, int n_max);

/// Result of applying a differential ladder operator to a sampled R_n(y).
struct LadderApplication {
    SampledFunction result;
    double fitted = 0.0;   // least-squares c with result ~ c R_{n-+1}(y)
    double residual = 0.0; // post-fit max deviation relative to max |result|
    double closed_form = 0.0;               // lambda-+(n) from the closed forms
    std::optional<double> printed;          // (n + k + 2 - N) eta_n / eta_{n-1} (lowering only)
    std::optional<double> recurrence;       // coefficient implied by the Laguerre recurrence
    std::optional<double> fitted_y_jacobian; // fitted constant with R_n normalised in y^{N-1} dy
    std::optional<double> fitted_y_laguerre; // fitted constant with R_n normalised in y^{N-2} dy
};

/// (-y d/dy - y/2 + k + n + 2 - N) R_n(y) with the analytic derivative,
/// fitted against R_{n-1}(y). For n = 0 the fit constant is 0 and the
/// residual is max |result| / max |R_0|.
LadderApplication apply_minus_differential(const BoundState& state, const RadialGrid& grid_y);

/// (y d/dy - y/2 + n + k + 1) R_n(y), fitted against R_{n+1}(y).
LadderApplication apply_plus_differential(const BoundState& state, const RadialGrid& grid_y);

/// y-grid reaching the decay point of R_{n+1}.
RadialGrid default_ladder_grid(const BoundState& state);

/// The same operators acting on an arbitrary sampled function of y, with
/// fourth-order central differences; the result drops two nodes at each end.
SampledFunction apply_lowering(const SampledFunction& f, int n, double k, int dim);
SampledFunction apply_raising(const SampledFunction& f, int n, double k, int dim);

} // namespace mie
