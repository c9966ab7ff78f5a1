#include "mie/cli/commands.hpp"

#include "mie/errors.hpp"
#include "mie/oracle.hpp"
#include "mie/wavefunction.hpp"
#include "output.hpp"

#include <algorithm>
#include <future>
#include <ostream>

namespace mie::cli {

using nlohmann::json;
using detail::number;

namespace {

constexpr double energy_tolerance = 5e-5;   // absolute, or relative when |E| > 1
constexpr double order_target = 2.0;
constexpr double order_band = 0.2;
constexpr double orthonormality_tolerance = 1e-10;

struct Entry {
    json label;
    AnyPotential potential;
};

struct ChannelResult {
    json report;
    std::vector<std::string> failures;
    bool domain = false;
    bool numeric = false;
};

std::string tag(const Entry& e, int dim, int ell) {
    return e.label.at("kind").get<std::string>() + " N=" + std::to_string(dim) + " ell=" + std::to_string(ell);
}

json grid_json(const OracleConfig& c) {
    return {{"stencil", to_string(c.stencil)},
            {"spacing", c.grid.spacing()},
            {"r_min", c.grid.r_min()},
            {"r_max", c.grid.r_max()},
            {"points", c.grid.count()}};
}

// Solves on spacings factor * h for each factor, coarsest first.
std::vector<OracleResult> ladder_of_solves(const AnyPotential& p, int ell, int dim, const OracleConfig& fine,
                                           std::initializer_list<double> factors, std::vector<double>& spacings) {
    std::vector<OracleResult> out;
    for (double f : factors) {
        const OracleConfig c = f == 1.0 ? fine : rescale_spacing(fine, f);
        spacings.push_back(c.grid.spacing());
        out.push_back(solve_bound_states(p, ell, dim, c));
    }
    return out;
}

bool order_ok(const ConvergenceReport& rep) {
    if (rep.status != ConvergenceStatus::converged) return false;
    return std::all_of(rep.orders.begin(), rep.orders.end(),
                       [](double o) { return std::abs(o - order_target) <= order_band; });
}

json convergence_json(const ConvergenceReport& rep) {
    return {{"orders", rep.orders},
            {"order", rep.status == ConvergenceStatus::converged ? json(rep.order) : json(nullptr)},
            {"status", rep.status == ConvergenceStatus::converged ? "converged" : "inconclusive"},
            {"note", rep.note}};
}

ChannelResult closed_form_channel(const Entry& e, const PotentialParams& p, int dim, int ell, int n_max,
                                  double coarsen) {
    ChannelResult out;
    const ChannelStatus status = channel_status(p, {0, ell, dim});
    json& j = out.report;
    j = {{"potential", e.label}, {"N", dim}, {"ell", ell}, {"status", to_string(status)}};
    if (!is_valid(status)) {
        out.domain = true;
        out.failures.push_back(tag(e, dim, ell) + ": " + std::string(to_string(status)));
        j["passed"] = false;
        return out;
    }
    OracleConfig fine = default_channel_config(p, ell, dim, n_max);
    if (coarsen != 1.0) fine = rescale_spacing(fine, coarsen);
    j["grid"] = grid_json(fine);

    std::vector<double> h;
    const auto solves = ladder_of_solves(p, ell, dim, fine, {4.0, 2.0, 1.0}, h);
    const double kinetic = p.hbar * p.hbar / p.M;
    json levels = json::array();
    bool ok = true;
    for (int n = 0; n <= n_max; ++n) {
        const double exact = energy(p, {n, ell, dim});
        const auto& bound = solves.back().bound;
        const bool is_bound = static_cast<std::size_t>(n) < bound.size();
        const double fd = is_bound ? bound[n] : solves.back().eigenvalues.at(n);
        const double delta = fd - exact;
        const bool within = is_bound && std::abs(delta) <= std::max(energy_tolerance, energy_tolerance * std::abs(exact));
        std::vector<double> series;
        for (const auto& s : solves) series.push_back(s.eigenvalues.at(n));
        const ConvergenceReport conv = estimate_order(h, series, exact, kinetic);
        const bool conv_ok = order_ok(conv);
        const std::string where = tag(e, dim, ell) + " n=" + std::to_string(n);
        if (!is_bound) out.failures.push_back(where + ": level not bound on the grid");
        else if (!within) out.failures.push_back(where + ": |E_fd - E| = " + format_number(std::abs(delta)));
        if (!conv_ok)
            out.failures.push_back(where + ": convergence " +
                                   (conv.status == ConvergenceStatus::converged ? "order " + format_number(conv.order)
                                                                                : "inconclusive (" + conv.note + ")"));
        ok = ok && within && conv_ok;
        levels.push_back({{"n", n},
                          {"closed_form", exact},
                          {"fd", fd},
                          {"delta", delta},
                          {"bound", is_bound},
                          {"within_tolerance", within},
                          {"convergence", convergence_json(conv)}});
    }
    j["levels"] = levels;

    double norm_err = 0.0, overlap_max = 0.0;
    std::vector<BoundState> states;
    for (int n = 0; n <= n_max; ++n) states.push_back(make_bound_state(p, {n, ell, dim}));
    for (const auto& s : states) norm_err = std::max(norm_err, std::abs(norm_check(s) - 1.0));
    for (std::size_t a = 0; a < states.size(); ++a)
        for (std::size_t b = a + 1; b < states.size(); ++b)
            overlap_max = std::max(overlap_max, std::abs(overlap(states[a], states[b], OverlapMeasure::r_space)));
    const bool ortho_ok = norm_err <= orthonormality_tolerance && overlap_max <= orthonormality_tolerance;
    if (!ortho_ok) out.failures.push_back(tag(e, dim, ell) + ": orthonormality");
    j["orthonormality"] = {{"max_norm_error", norm_err}, {"max_overlap", overlap_max}, {"passed", ortho_ok}};
    j["passed"] = ok && ortho_ok;
    return out;
}

ChannelResult numeric_channel(const Entry& e, const AnyPotential& p, int dim, int ell, int n_max, double coarsen) {
    ChannelResult out;
    out.numeric = true;
    json& j = out.report;
    j = {{"potential", e.label}, {"N", dim}, {"ell", ell}};
    OracleConfig fine = default_numeric_config(p, ell, dim, n_max);
    if (coarsen != 1.0) fine = rescale_spacing(fine, coarsen);
    j["grid"] = grid_json(fine);

    std::vector<double> h;
    const auto solves = ladder_of_solves(p, ell, dim, fine, {8.0, 4.0, 2.0, 1.0}, h);
    const double kinetic = hbar_of(p) * hbar_of(p) / mass_of(p);
    json levels = json::array();
    bool ok = true;
    for (int n = 0; n <= n_max; ++n) {
        const auto& bound = solves.back().bound;
        const bool is_bound = static_cast<std::size_t>(n) < bound.size();
        std::vector<double> series;
        for (const auto& s : solves) series.push_back(s.eigenvalues.at(n));
        const ConvergenceReport conv = estimate_order(h, series, std::nullopt, kinetic);
        const bool conv_ok = order_ok(conv);
        const std::string where = tag(e, dim, ell) + " n=" + std::to_string(n);
        if (!is_bound) out.failures.push_back(where + ": level not bound on the grid");
        if (!conv_ok) out.failures.push_back(where + ": convergence check failed");
        ok = ok && is_bound && conv_ok;
        levels.push_back({{"n", n}, {"fd", series.back()}, {"bound", is_bound}, {"convergence", convergence_json(conv)}});
    }
    j["levels"] = levels;
    j["bound_census"] = solves.back().bound_census;
    j["passed"] = ok;
    return out;
}

} // namespace

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    detail::pick_format(c, Format::json, false);
    std::vector<Entry> suite;
    Ranges r{3, 2, {2, 3, 5}};
    if (c.potential) {
        suite.push_back({to_json(c)["potential"], resolve_potential(*c.potential, c.units)});
    } else {
        const Units& u = c.units;
        suite.push_back({{{"kind", "coulomb"}, {"B", -1.0}}, coulomb(-1.0, u.M, u.hbar)});
        suite.push_back({{{"kind", "kratzer_fues"}, {"D0", 5.0}, {"r0", 1.0}}, kratzer_fues(5.0, 1.0, u.M, u.hbar)});
    }
    if (c.ranges) r = *c.ranges;
    std::sort(r.dims.begin(), r.dims.end());

    // one task per channel; results are merged in (potential, N, ell) order
    std::vector<std::future<ChannelResult>> tasks;
    for (const Entry& e : suite)
        for (int dim : r.dims)
            for (int ell = 0; ell <= r.ell_max; ++ell)
                tasks.push_back(std::async(std::launch::async, [&e, dim, ell, &r, &c] {
                    if (const auto* p = std::get_if<PotentialParams>(&e.potential))
                        return closed_form_channel(e, *p, dim, ell, r.n_max, c.coarsen);
                    return numeric_channel(e, e.potential, dim, ell, r.n_max, c.coarsen);
                }));

    json closed = json::array(), numeric = json::array();
    std::vector<std::string> failures;
    bool domain = false;
    for (auto& t : tasks) {
        ChannelResult res = t.get();
        (res.numeric ? numeric : closed).push_back(std::move(res.report));
        failures.insert(failures.end(), res.failures.begin(), res.failures.end());
        domain = domain || res.domain;
    }
    json report{{"suite", c.potential ? "configured" : "default"},
                {"units", {{"M", c.units.M}, {"hbar", c.units.hbar}}},
                {"ranges", {{"n_max", r.n_max}, {"ell_max", r.ell_max}, {"dims", r.dims}}},
                {"coarsen", c.coarsen},
                {"tolerances",
                 {{"energy", energy_tolerance},
                  {"order", order_target},
                  {"order_band", order_band},
                  {"orthonormality", orthonormality_tolerance}}},
                {"closed_form", closed},
                {"numeric_only", numeric},
                {"failures", failures},
                {"passed", failures.empty()}};
    detail::emit(c, "verify", Format::json, report.dump(2) + "\n", out);
    for (const auto& f : failures) err << "verify: " << f << '\n';
    if (domain) return exit_domain;
    return failures.empty() ? exit_ok : exit_check_failed;
}

} // namespace mie::cli
