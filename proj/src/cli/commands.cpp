#include "mie/cli/commands.hpp"

#include "mie/errors.hpp"
#include "mie/spectrum.hpp"
#include "mie/wavefunction.hpp"
#include "output.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mie::cli {

using nlohmann::json;
using detail::number;

namespace {

const PotentialSpec& require_potential(const RunConfig& c) {
    if (!c.potential) throw config_error("a potential is required for this command");
    return *c.potential;
}

json units_json(const Units& u) { return {{"M", u.M}, {"hbar", u.hbar}}; }

} // namespace

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PotentialSpec& spec = require_potential(c);
    const AnyPotential pot = resolve_potential(spec, c.units);
    Ranges r = c.ranges.value_or(Ranges{});
    std::sort(r.dims.begin(), r.dims.end());
    const Format fmt = detail::pick_format(c, Format::csv, true);

    std::vector<std::pair<int, SpectrumRow>> rows;
    for (int dim : r.dims) {
        if (const auto* p = std::get_if<PotentialParams>(&pot)) {
            for (const SpectrumRow& row : spectrum_table(*p, r.n_max, r.ell_max, dim)) rows.emplace_back(dim, row);
        } else {
            for (int ell = 0; ell <= r.ell_max; ++ell)
                for (int n = 0; n <= r.n_max; ++n) {
                    SpectrumRow row;
                    row.q = {n, ell, dim};
                    row.status = ChannelStatus::no_closed_form;
                    rows.emplace_back(dim, row);
                }
        }
    }

    bool any_invalid = false;
    std::ostringstream body;
    json j_rows = json::array();
    if (fmt == Format::csv) body << "N,ell,n,k,eps,E,status\n";
    for (const auto& [dim, row] : rows) {
        any_invalid = any_invalid || !is_valid(row.status);
        if (fmt == Format::csv) {
            body << dim << ',' << row.q.ell << ',' << row.q.n << ',' << format_number(row.k) << ','
                 << format_number(row.eps) << ',' << format_number(row.energy) << ',' << to_string(row.status) << '\n';
        } else {
            j_rows.push_back({{"N", dim},
                              {"ell", row.q.ell},
                              {"n", row.q.n},
                              {"k", number(row.k)},
                              {"eps", number(row.eps)},
                              {"E", number(row.energy)},
                              {"status", to_string(row.status)}});
        }
    }
    std::string content = body.str();
    if (fmt == Format::json) {
        json j{{"potential", to_json(c)["potential"]}, {"units", units_json(c.units)}, {"rows", j_rows}};
        content = j.dump(2) + "\n";
    }
    detail::emit(c, "spectrum", fmt, content, out);
    if (any_invalid) {
        err << "spectrum: some channels have no valid bound state (see status column)\n";
        return exit_domain;
    }
    return exit_ok;
}

int cmd_wavefunction(const RunConfig& c, std::ostream& out, std::ostream& /*err*/) {
    const PotentialSpec& spec = require_potential(c);
    const AnyPotential pot = resolve_potential(spec, c.units);
    const auto* p = std::get_if<PotentialParams>(&pot);
    if (!p) throw bound_state_error(ChannelStatus::no_closed_form, "general Mie exponents have no closed-form eigenfunction");
    const Format fmt = detail::pick_format(c, Format::csv, true);
    const BoundState s = make_bound_state(*p, {c.channel.n, c.channel.ell, c.channel.dim});

    const RadialGrid base = default_residual_grid(s);
    RadialGrid grid = base;
    try {
        grid = RadialGrid(c.grid.r_min.value_or(base.r_min()), c.grid.r_max.value_or(base.r_max()),
                          static_cast<std::size_t>(c.grid.points.value_or(static_cast<int>(base.count()))));
    } catch (const mie::domain_error& e) {
        throw config_error(std::string("grid: ") + e.what());
    }
    const SampledFunction f = sample_radial(s, grid);
    std::vector<double> residual(grid.count(), std::nan(""));
    double relative = std::nan("");
    if (c.residual) {
        const ResidualReport rep = [&] {
            try {
                return ode_residual(s, f);
            } catch (const resolution_error& e) {
                throw config_error(std::string("grid too coarse for the residual: ") + e.what());
            }
        }();
        relative = rep.relative;
        // the residual grid drops two nodes at each end
        for (std::size_t i = 0; i < rep.residual.values.size(); ++i) residual[i + 2] = rep.residual.values[i];
    }

    std::string content;
    if (fmt == Format::csv) {
        std::ostringstream body;
        body << "# zeta=" << format_number(std::exp(s.log_zeta)) << ", k=" << format_number(s.k)
             << ", eps=" << format_number(s.eps) << ", E=" << format_number(s.energy) << ", n=" << s.q.n
             << ", ell=" << s.q.ell << ", N=" << s.q.dim;
        if (c.residual) body << ", relative_residual=" << format_number(relative);
        body << '\n' << (c.residual ? "r,R,residual\n" : "r,R\n");
        for (std::size_t i = 0; i < grid.count(); ++i) {
            body << format_number(grid[i]) << ',' << format_number(f.values[i]);
            if (c.residual) body << ',' << (std::isnan(residual[i]) ? std::string() : format_number(residual[i]));
            body << '\n';
        }
        content = body.str();
    } else {
        json j{{"meta",
                {{"zeta", std::exp(s.log_zeta)},
                 {"log_zeta", s.log_zeta},
                 {"k", s.k},
                 {"eps", s.eps},
                 {"E", s.energy},
                 {"n", s.q.n},
                 {"ell", s.q.ell},
                 {"N", s.q.dim}}},
               {"r", grid.nodes()},
               {"R", f.values}};
        if (c.residual) {
            json res = json::array();
            for (double v : residual) res.push_back(number(v));
            j["residual"] = res;
            j["meta"]["relative_residual"] = relative;
        }
        content = j.dump(2) + "\n";
    }
    detail::emit(c, "wavefunction", fmt, content, out);
    return exit_ok;
}

int cmd_presets(const RunConfig& c, std::ostream& out, std::ostream& /*err*/) {
    const Format fmt = detail::pick_format(c, Format::json, false);
    json catalog = json::array();
    catalog.push_back({{"kind", "raw"},
                       {"parameters", {{"A", 0.0}, {"B", 0.0}, {"C", 0.0}}},
                       {"form", "A/r^2 + B/r + C"}});
    catalog.push_back({{"kind", "coulomb"}, {"parameters", {{"B", -1.0}}}, {"form", "B/r"}});
    catalog.push_back({{"kind", "kratzer_fues"},
                       {"parameters", {{"D0", 1.0}, {"r0", 1.0}}},
                       {"form", "D0 ((r - r0)/r)^2 - D0"}});
    catalog.push_back({{"kind", "modified_kratzer"},
                       {"parameters", {{"D0", 1.0}, {"r0", 1.0}, {"convention", "standard"}}},
                       {"conventions", {"standard", "inverted"}},
                       {"form", "standard: D0 ((r - r0)/r)^2; inverted: -D0 ((r - r0)/r)^2"}});
    catalog.push_back({{"kind", "mie"},
                       {"parameters", {{"D0", 1.0}, {"r0", 1.0}, {"a", 2.0}, {"b", 1.0}}},
                       {"form", "D0 [a/(b-a) (r0/r)^b - b/(b-a) (r0/r)^a]"},
                       {"closed_form", "only for (a, b) = (2, 1)"}});
    json j{{"presets", catalog}, {"units", units_json(c.units)}};
    if (c.potential) {
        const AnyPotential pot = resolve_potential(*c.potential, c.units);
        if (const auto* p = std::get_if<PotentialParams>(&pot))
            j["resolved"] = {{"A", p->A}, {"B", p->B}, {"C", p->C}, {"closed_form", true}};
        else
            j["resolved"] = {{"closed_form", false}};
    }
    detail::emit(c, "presets", fmt, j.dump(2) + "\n", out);
    return exit_ok;
}

int run_command(std::string_view name, const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (name == "spectrum") return cmd_spectrum(c, out, err);
        if (name == "wavefunction") return cmd_wavefunction(c, out, err);
        if (name == "ladder-check") return cmd_ladder_check(c, out, err);
        if (name == "verify") return cmd_verify(c, out, err);
        if (name == "presets") return cmd_presets(c, out, err);
        throw config_error("unknown command '" + std::string(name) + "'");
    } catch (const config_error& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const io_error& e) {
        err << "io error: " << e.what() << '\n';
        return exit_io;
    } catch (const bound_state_error& e) {
        err << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_domain;
    } catch (const mie::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const resolution_error& e) {
        err << "resolution error: " << e.what() << '\n';
        return exit_config;
    } catch (const algebra_violation& e) {
        err << "algebra violation: " << e.what() << '\n';
        return exit_domain;
    }
}

} // namespace mie::cli
