#pragma once

#include "mie/grid.hpp"
#include "mie/spectrum.hpp"

#include <span>
#include <vector>

namespace mie {

/// Which closed form of the normalisation constant to use.
///   corrected:     zeta = (2 eps)^{(alpha+2)/2} / Gamma(alpha+1)
///                         * sqrt(Gamma(n+alpha+1) / (n! (2n+alpha+1)))
///   gamma_variant: the same with (2n+alpha+1) replaced by Gamma(2n+alpha+2),
///                  kept only as a diagnostic; it is not normalised for n >= 1.
enum class NormalizationForm { corrected, gamma_variant };

double log_norm_constant(const BoundState& s, NormalizationForm form = NormalizationForm::corrected);
double norm_constant(const BoundState& s, NormalizationForm form = NormalizationForm::corrected);

/// ln eta with R(y) = eta y^{k+2-N} e^{-y/2} L_n^alpha(y), y = 2 eps r.
double log_eta(const BoundState& s);

/// ln|value| together with its sign (0 for an exact zero).
struct SignedLog {
    double log_abs = 0.0;
    int sign = 0;

    double value() const;
};

/// R(r) = zeta r^{k+2-N} e^{-eps r} 1F1(-n, 2k+3-N, 2 eps r), evaluated in
/// log space. Throws mie::domain_error for r <= 0.
SignedLog log_radial(const BoundState& s, double r);
double eval_radial(const BoundState& s, double r);

/// Same function through the Laguerre form with eta.
SignedLog log_radial_laguerre(const BoundState& s, double r);
double eval_radial_laguerre(const BoundState& s, double r);

/// R as a function of the state's own dimensionless variable y = 2 eps r,
/// and its analytic y-derivative.
double eval_radial_y(const BoundState& s, double y);
double radial_y_derivative(const BoundState& s, double y);

SampledFunction sample_radial(const BoundState& s, const RadialGrid& grid);

/// int_0^inf R^2 r^{N-1} dr with a Gauss-Laguerre rule in y (weight
/// exponent alpha + 1). Uses s.log_zeta as stored. order <= 0 selects
/// default_quadrature_order(n).
double norm_check(const BoundState& s, int order = 0);

enum class OverlapMeasure {
    r_space,    // int R_a(r) R_b(r) r^{N-1} dr
    y_jacobian, // normalised int R_a(y) R_b(y) y^{N-1} dy, shared y
    y_laguerre, // normalised int R_a(y) R_b(y) y^{N-2} dy, shared y
};

/// Overlap of two states of the same (params, ell, N). The y measures return
/// the cosine I_ab / sqrt(I_aa I_bb).
double overlap(const BoundState& a, const BoundState& b, OverlapMeasure measure);

/// sqrt of the self-overlap in one of the y measures (r_space gives the
/// ordinary norm, 1 for a normalised state).
double measure_norm(const BoundState& s, OverlapMeasure measure);

struct ResidualReport {
    SampledFunction residual;  // on the grid without two nodes at each end
    double relative = 0.0;     // max |residual| / max term magnitude
};

/// Residual of R'' + (N-1)/r R' - nu(nu+1)/r^2 R - eps^2 R + beta/r R for a
/// sampled function, using fourth-order central differences. Equation
/// coefficients come from `s`. Throws resolution_error when h^2 eps^2 > 0.1.
ResidualReport ode_residual(const BoundState& s, const SampledFunction& f);
ResidualReport ode_residual(const BoundState& s, const RadialGrid& grid);

struct ResidualConvergence {
    std::vector<double> spacings;  // coarsest first
    std::vector<double> residuals; // max |residual| on the shared nodes
    std::vector<double> orders;    // log2 ratios of consecutive residuals
};

/// Residual on grids over the same interval as `fine` with 2^halvings, ...,
/// 2, 1 times its spacing, compared only on the interior nodes of the
/// coarsest grid. The first interior node therefore stays put while h
/// shrinks, so the ratios isolate the stencil order.
ResidualConvergence residual_convergence(const BoundState& s, const RadialGrid& fine, int halvings = 2);

/// y beyond the envelope peak where y^{k+2-N+n} e^{-y/2} has fallen by
/// `factor` relative to its maximum.
double decay_y(const BoundState& s, double factor);

/// Grid in r covering y in [0.2, decay_y(1e-12)] with y-spacing 0.01.
RadialGrid default_residual_grid(const BoundState& s);

int count_sign_changes(std::span<const double> values);

/// Sign changes of R on a fine grid out to decay_y(1e-12).
int node_count(const BoundState& s);

} // namespace mie
