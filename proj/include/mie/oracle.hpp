#pragma once

// Finite-difference oracle for the radial equation
//   -(hbar^2/2M) u'' + V_eff u = E u,   u = r^{(N-1)/2} R,
//   V_eff = V + (hbar^2/2M) [ell(ell+N-2) + (N-1)(N-3)/4] / r^2,
// discretised as a symmetric tridiagonal matrix whose unknowns are the grid
// nodes; u vanishes at the ghost nodes r_min - h and r_max + h.

#include "mie/grid.hpp"
#include "mie/potential.hpp"
#include "mie/spectrum.hpp"
#include "mie/tridiagonal.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mie {

enum class Stencil {
    /// diag = hbar^2/(M h^2) + V_eff(r_i), offdiag = -hbar^2/(2 M h^2).
    pointwise,
    /// Flux form -(1/w)(w R')' with w = r^{N-1}, symmetrised by sqrt(w):
    ///   diag_i = hbar^2/(2M h^2) (w_{i-1/2} + w_{i+1/2}) / w_i + V + centrifugal,
    ///   offdiag_i = -hbar^2/(2M h^2) w_{i+1/2} / sqrt(w_i w_{i+1}).
    /// On cell centres r_i = (i - 1/2) h the origin flux vanishes.
    flux,
};

std::string_view to_string(Stencil s);

struct OracleConfig {
    RadialGrid grid;
    std::size_t count = 4;     // eigenvalues requested
    double tolerance = 1e-13;  // bisection bracket width
    Stencil stencil = Stencil::pointwise;

    void validate() const;
};

double effective_potential(const AnyPotential& p, int ell, int dim, double r);

Tridiagonal build_tridiagonal(const OracleConfig& config, const AnyPotential& p, int ell, int dim);

struct OracleResult {
    std::vector<double> eigenvalues; // lowest `count`, bound or not
    std::vector<double> bound;       // those below min(asymptote, V_eff(r_max))
    std::size_t bound_census = 0;    // Sturm count below the same threshold
};

OracleResult solve_bound_states(const AnyPotential& p, int ell, int dim, const OracleConfig& config);

/// Exponent J of u ~ r^J at the origin from the indicial equation
/// J(J-1) = ell(ell+N-2) + (N-1)(N-3)/4 + 2 M A / hbar^2, when the potential
/// has a 1/r^2 core. Empty otherwise.
std::optional<double> origin_exponent(const AnyPotential& p, int ell, int dim);

/// pointwise unless u starts like a small non-integer power (J <= 3/2, J not
/// an integer), where the flux form keeps second-order convergence.
Stencil auto_stencil(const AnyPotential& p, int ell, int dim);

/// Grid with spacing h reaching at least r_max whose ghost node sits at the
/// origin: nodes i h (pointwise) or (i - 1/2) h (flux).
RadialGrid origin_grid(Stencil stencil, double h, double r_max);

/// Default configuration for a closed-form channel: h = 0.005 / eps_0,
/// r_max = max((2 n_max + 2k + 10)/eps_min, envelope of R_{n_max} down to
/// 1e-12), stencil from auto_stencil, count = n_max + 1.
OracleConfig default_channel_config(const PotentialParams& p, int ell, int dim, int n_max);

/// Default configuration for a potential without closed form: a coarse
/// trial solve sizes the domain from the decay length of level n_max.
OracleConfig default_numeric_config(const AnyPotential& p, int ell, int dim, int n_max);

/// Same grid family with the spacing multiplied by `factor`.
OracleConfig rescale_spacing(const OracleConfig& c, double factor);

enum class ConvergenceStatus { converged, inconclusive };

struct ConvergenceReport {
    std::vector<double> spacings;
    std::vector<double> energies;
    std::vector<double> errors; // |E - exact| or successive differences
    std::vector<double> orders; // one per consecutive pair of errors
    double order = 0.0;         // finest estimate
    ConvergenceStatus status = ConvergenceStatus::inconclusive;
    std::string note;
};

/// Order estimates p = log2(e_i / e_{i+1}) for spacings halving at each step.
/// With `exact`, e_i = |E_i - exact|; otherwise e_i = |E_i - E_{i+1}|.
/// Inconclusive when fewer than two errors exist, an error sits at the
/// rounding floor, or the sequence is not strictly decreasing. `kinetic`
/// (hbar^2/M) raises the floor by the stencil stiffness kinetic/h^2.
ConvergenceReport estimate_order(std::span<const double> spacings, std::span<const double> energies,
                                 std::optional<double> exact = std::nullopt, double kinetic = 0.0);

/// Solves on base, base/2, ... (halvings + 1 grids) and estimates the order of
/// eigenvalue `level`. Requires halvings >= 2. Pass a coarsened base
/// (rescale_spacing(config, 4)) to end the study on `config` itself.
ConvergenceReport convergence_study(const AnyPotential& p, int ell, int dim, const OracleConfig& base,
                                    std::size_t level, int halvings = 2,
                                    std::optional<double> exact = std::nullopt);

} // namespace mie
