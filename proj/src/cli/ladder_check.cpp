#include "mie/cli/commands.hpp"

#include "mie/errors.hpp"
#include "mie/ladder.hpp"
#include "mie/wavefunction.hpp"
#include "output.hpp"

#include <algorithm>
#include <ostream>

namespace mie::cli {

using nlohmann::json;
using detail::number;

namespace {

constexpr double algebra_tolerance = 1e-12;
constexpr double differential_tolerance = 1e-9;

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

json application_json(const LadderApplication& a) {
    return {{"fitted", a.fitted},
            {"residual", a.residual},
            {"closed_form", a.closed_form},
            {"printed", optional_number(a.printed)},
            {"recurrence", optional_number(a.recurrence)},
            {"fitted_y_jacobian", optional_number(a.fitted_y_jacobian)},
            {"fitted_y_laguerre", optional_number(a.fitted_y_laguerre)}};
}

} // namespace

int cmd_ladder_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.potential) throw config_error("a potential is required for this command");
    const AnyPotential pot = resolve_potential(*c.potential, c.units);
    const auto* p = std::get_if<PotentialParams>(&pot);
    if (!p) throw bound_state_error(ChannelStatus::no_closed_form, "general Mie exponents have no ladder structure");
    detail::pick_format(c, Format::json, false);
    const Ranges r = c.ranges.value_or(Ranges{5, 0, {3}});
    const int algebra_n = std::max(10, r.n_max);

    bool passed = true;
    bool domain_failure = false;
    std::vector<std::string> failures;
    json channels = json::array();
    for (int dim : r.dims)
        for (int ell = 0; ell <= r.ell_max; ++ell) {
            const QuantumNumbers q0{0, ell, dim};
            const ChannelStatus status = channel_status(*p, q0);
            json ch{{"N", dim}, {"ell", ell}, {"status", to_string(status)}};
            if (!is_valid(status)) {
                domain_failure = true;
                failures.push_back("N=" + std::to_string(dim) + " ell=" + std::to_string(ell) + ": " +
                                   std::string(to_string(status)));
                channels.push_back(ch);
                continue;
            }
            const double k = k_ell_N(*p, ell, dim);
            const CommutatorReport comm = commutator_check(k, dim, algebra_n);
            const CasimirReport cas = casimir_check(k, dim, algebra_n);
            ch["k"] = k;
            ch["J"] = cas.J;
            ch["casimir_expected"] = cas.expected;
            ch["commutator"] = {{"max_residual", comm.max_residual()},
                                {"minus_plus", comm.minus_plus},
                                {"zero_plus", comm.zero_plus},
                                {"minus_zero", comm.minus_zero},
                                {"zero_a", comm.zero_a},
                                {"zero_s", comm.zero_s},
                                {"violations", comm.violations}};
            ch["casimir"] = {{"max_residual", cas.max_residual()},
                             {"off_diagonal", cas.off_diagonal},
                             {"violations", cas.violations}};
            const bool algebra_ok = comm.passed(algebra_tolerance) && cas.passed(algebra_tolerance) &&
                                    lambda_minus(0, k, dim) == 0.0;

            json levels = json::array();
            bool differential_ok = true;
            for (int n = 0; n <= algebra_n; ++n) {
                json lv{{"n", n},
                        {"lambda_minus", lambda_minus(n, k, dim)},
                        {"lambda_plus", lambda_plus(n, k, dim)},
                        {"lambda_zero", lambda_zero(n, k, dim)},
                        {"commutator_residual", comm.rows.at(n).residual},
                        {"casimir_residual", cas.rows.at(n).residual}};
                if (n <= r.n_max) {
                    const BoundState s = make_bound_state(*p, {n, ell, dim});
                    const RadialGrid grid = default_ladder_grid(s);
                    const LadderApplication lo = apply_minus_differential(s, grid);
                    const LadderApplication up = apply_plus_differential(s, grid);
                    lv["lowering"] = application_json(lo);
                    lv["raising"] = application_json(up);
                    // fitted minus closed-form coefficient under each normalisation of R_n(y)
                    const auto discrepancies = [](json& dst, const LadderApplication& a) {
                        if (a.fitted_y_jacobian)
                            dst["discrepancy_y_jacobian"] = std::abs(*a.fitted_y_jacobian) - a.closed_form;
                        if (a.fitted_y_laguerre)
                            dst["discrepancy_y_laguerre"] = std::abs(*a.fitted_y_laguerre) - a.closed_form;
                    };
                    if (n > 0) discrepancies(lv["lowering"], lo);
                    discrepancies(lv["raising"], up);
                    if (!(lo.residual <= differential_tolerance) || !(up.residual <= differential_tolerance)) {
                        differential_ok = false;
                        failures.push_back("N=" + std::to_string(dim) + " ell=" + std::to_string(ell) +
                                           " n=" + std::to_string(n) + ": differential residual above 1e-9");
                    }
                }
                levels.push_back(lv);
            }
            ch["levels"] = levels;
            if (!algebra_ok)
                failures.push_back("N=" + std::to_string(dim) + " ell=" + std::to_string(ell) +
                                   ": algebraic residual above 1e-12");
            ch["passed"] = algebra_ok && differential_ok;
            passed = passed && algebra_ok && differential_ok;
            channels.push_back(ch);
        }

    json report{{"potential", to_json(c)["potential"]},
                {"units", {{"M", c.units.M}, {"hbar", c.units.hbar}}},
                {"tolerances", {{"algebra", algebra_tolerance}, {"differential", differential_tolerance}}},
                {"algebra_n_max", algebra_n},
                {"differential_n_max", r.n_max},
                {"channels", channels},
                {"failures", failures},
                {"passed", passed && !domain_failure}};
    detail::emit(c, "ladder_check", Format::json, report.dump(2) + "\n", out);
    for (const auto& f : failures) err << "ladder-check: " << f << '\n';
    if (domain_failure) return exit_domain;
    return passed ? exit_ok : exit_check_failed;
}

} // namespace mie::cli
