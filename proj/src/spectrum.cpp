#include "mie/spectrum.hpp"

#include "mie/wavefunction.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mie {

std::string_view to_string(ChannelStatus s) {
    switch (s) {
    case ChannelStatus::ok: return "ok";
    case ChannelStatus::borderline: return "borderline";
    case ChannelStatus::fall_to_center: return "FallToCenter";
    case ChannelStatus::not_normalizable: return "NotNormalizable";
    case ChannelStatus::no_bound_states: return "NoBoundStates";
    case ChannelStatus::invalid_numbers: return "InvalidQuantumNumbers";
    case ChannelStatus::no_closed_form: return "NoClosedForm";
    }
    return "unknown";
}

void QuantumNumbers::validate() const {
    if (n < 0 || ell < 0)
        throw bound_state_error(ChannelStatus::invalid_numbers, "quantum numbers n and ell must be non-negative");
    if (dim < 2)
        throw bound_state_error(ChannelStatus::invalid_numbers,
                                "dimension N must be at least 2, got " + std::to_string(dim));
}

double nu_product(const PotentialParams& params, int ell, int dim) {
    params.validate();
    QuantumNumbers{0, ell, dim}.validate();
    return ell * (ell + dim - 2.0) + 2.0 * params.M * params.A / (params.hbar * params.hbar);
}

namespace {

struct Root {
    double k;
    bool borderline;
};

Root solve_indicial(const PotentialParams& params, int ell, int dim) {
    const double nn = nu_product(params, ell, dim);
    const double shift = dim - 2.0;
    const double disc = shift * shift + 4.0 * nn;
    if (disc < 0.0)
        throw bound_state_error(ChannelStatus::fall_to_center,
                                "negative indicial discriminant: the 1/r^2 term is over-attractive");
    const double k = 0.5 * (shift + std::sqrt(disc));
    if (!(2.0 * k + 3.0 - dim > 0.0))
        throw bound_state_error(ChannelStatus::not_normalizable, "2k + 3 - N <= 0");
    return {k, disc == 0.0};
}

void require_binding(const PotentialParams& params) {
    if (!(params.B < 0.0))
        throw bound_state_error(ChannelStatus::no_bound_states, "B >= 0 admits no bound states");
}

} // namespace

double k_ell_N(const PotentialParams& params, int ell, int dim) {
    return solve_indicial(params, ell, dim).k;
}

double epsilon(const PotentialParams& params, const QuantumNumbers& q) {
    q.validate();
    const double k = k_ell_N(params, q.ell, q.dim);
    require_binding(params);
    const double beta = -2.0 * params.M * params.B / (params.hbar * params.hbar);
    return beta / (2.0 * q.n + 2.0 * k + 3.0 - q.dim);
}

double energy(const PotentialParams& params, const QuantumNumbers& q) {
    q.validate();
    const double k = k_ell_N(params, q.ell, q.dim);
    require_binding(params);
    const double x = params.B / (q.n + k + 0.5 * (3.0 - q.dim));
    return params.C - params.M / (2.0 * params.hbar * params.hbar) * x * x;
}

BoundState make_bound_state(const PotentialParams& params, const QuantumNumbers& q) {
    q.validate();
    const Root root = solve_indicial(params, q.ell, q.dim);
    require_binding(params);

    BoundState s;
    s.params = params;
    s.q = q;
    s.nu_product = nu_product(params, q.ell, q.dim);
    s.k = root.k;
    s.borderline = root.borderline;
    s.beta = -2.0 * params.M * params.B / (params.hbar * params.hbar);
    s.eps = s.beta / (2.0 * q.n + 2.0 * s.k + 3.0 - q.dim);
    s.energy = energy(params, q);
    s.alpha = 2.0 * s.k + 2.0 - q.dim;
    s.log_zeta = log_norm_constant(s);
    s.zeta = std::exp(s.log_zeta);
    return s;
}

ChannelStatus channel_status(const PotentialParams& params, const QuantumNumbers& q) {
    try {
        const BoundState s = make_bound_state(params, q);
        return s.borderline ? ChannelStatus::borderline : ChannelStatus::ok;
    } catch (const bound_state_error& e) {
        return e.kind();
    }
}

std::vector<SpectrumRow> spectrum_table(const PotentialParams& params, int n_max, int ell_max, int dim) {
    std::vector<SpectrumRow> rows;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    for (int ell = 0; ell <= ell_max; ++ell) {
        for (int n = 0; n <= n_max; ++n) {
            SpectrumRow row{{n, ell, dim}, ChannelStatus::ok, nan, nan, nan};
            try {
                const BoundState s = make_bound_state(params, row.q);
                row.status = s.borderline ? ChannelStatus::borderline : ChannelStatus::ok;
                row.k = s.k;
                row.eps = s.eps;
                row.energy = s.energy;
            } catch (const bound_state_error& e) {
                row.status = e.kind();
            }
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace mie
