#pragma once

#include "mie/errors.hpp"
#include "mie/potential.hpp"

#include <vector>

namespace mie {

struct QuantumNumbers {
    int n = 0;   // radial quantum number
    int ell = 0; // orbital quantum number
    int dim = 3; // spatial dimension N

    /// Throws bound_state_error(invalid_numbers) unless n, ell >= 0, dim >= 2.
    void validate() const;

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Closed-form data of one bound state. All fields are derived from
/// (params, q) by make_bound_state; log_zeta is authoritative for the
/// normalisation (zeta itself may overflow for large k).
struct BoundState {
    PotentialParams params;
    QuantumNumbers q;
    double nu_product = 0.0; // nu(nu + 1) = ell(ell + N - 2) + 2 M A / hbar^2
    double k = 0.0;          // non-negative root of k^2 - (N-2) k - nu(nu+1) = 0
    double beta = 0.0;       // -2 M B / hbar^2
    double eps = 0.0;        // inverse decay length
    double energy = 0.0;
    double alpha = 0.0;      // Laguerre index 2k + 2 - N
    double zeta = 0.0;
    double log_zeta = 0.0;
    bool borderline = false; // indicial discriminant exactly zero

    /// Exponent of the small-r power law, k + 2 - N.
    double power() const noexcept { return k + 2.0 - q.dim; }
    /// Bargmann index J = k + (3 - N)/2.
    double bargmann_index() const noexcept { return k + 0.5 * (3.0 - q.dim); }
};

double nu_product(const PotentialParams& params, int ell, int dim);

/// k_+ = [(N-2) + sqrt((N-2)^2 + 4 nu(nu+1))] / 2. Throws
/// bound_state_error(fall_to_center) for a negative discriminant and
/// bound_state_error(not_normalizable) when 2k + 3 - N <= 0.
double k_ell_N(const PotentialParams& params, int ell, int dim);

/// eps = beta / (2n + 2k + 3 - N). Throws bound_state_error(no_bound_states)
/// when B >= 0.
double epsilon(const PotentialParams& params, const QuantumNumbers& q);

/// E = C - (M / 2 hbar^2) (B / (n + k + (3 - N)/2))^2.
double energy(const PotentialParams& params, const QuantumNumbers& q);

/// Validates and assembles every closed-form quantity of the state.
BoundState make_bound_state(const PotentialParams& params, const QuantumNumbers& q);

/// Status of a channel without throwing.
ChannelStatus channel_status(const PotentialParams& params, const QuantumNumbers& q);

struct SpectrumRow {
    QuantumNumbers q;
    ChannelStatus status = ChannelStatus::ok;
    double k = 0.0;      // NaN when status is not valid
    double eps = 0.0;    // NaN when status is not valid
    double energy = 0.0; // NaN when status is not valid
};

/// Rows for all (n <= n_max, ell <= ell_max) at dimension dim, ordered by
/// (ell, n). Invalid channels are kept with their status.
std::vector<SpectrumRow> spectrum_table(const PotentialParams& params, int n_max, int ell_max, int dim);

} // namespace mie
