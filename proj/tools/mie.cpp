// Command-line entry point: flags are collected into a JSON merge patch and
// applied over the optional --config file before strict parsing.

#include "mie/cli/commands.hpp"
#include "mie/cli/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;
using namespace mie::cli;

namespace {

struct Flags {
    std::string config_path;
    bool dump_config = false;
    std::optional<std::string> output, format, potential, convention;
    std::optional<double> A, B, C, D0, r0, a, b, M, hbar;
    std::optional<int> n_max, ell_max;
    std::vector<int> dims;
    std::optional<int> n, ell, dim, points;
    std::optional<double> r_min, r_max, coarsen;
    bool residual = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("-c,--config", f.config_path, "JSON run configuration");
    sub->add_flag("--dump-config", f.dump_config, "print the resolved configuration and exit");
    sub->add_option("-o,--output", f.output, "output file ('-' for stdout)");
    sub->add_option("--format", f.format, "csv or json");
    sub->add_option("--potential", f.potential, "raw | coulomb | kratzer_fues | modified_kratzer | mie");
    sub->add_option("--A", f.A, "inverse-square coefficient (raw)");
    sub->add_option("--B", f.B, "Coulomb coefficient (raw, coulomb)");
    sub->add_option("--C", f.C, "constant offset (raw)");
    sub->add_option("--D0", f.D0, "well depth");
    sub->add_option("--r0", f.r0, "equilibrium distance");
    sub->add_option("--a", f.a, "Mie exponent a");
    sub->add_option("--b", f.b, "Mie exponent b");
    sub->add_option("--convention", f.convention, "modified Kratzer sign convention: standard | inverted");
    sub->add_option("--M", f.M, "mass");
    sub->add_option("--hbar", f.hbar, "reduced Planck constant");
    sub->add_option("--n-max", f.n_max, "largest radial quantum number");
    sub->add_option("--ell-max", f.ell_max, "largest angular momentum");
    sub->add_option("--dims", f.dims, "space dimensions N");
}

json build_patch(const Flags& f, const json& base) {
    json patch = json::object();
    if (f.potential || f.A || f.B || f.C || f.D0 || f.r0 || f.a || f.b || f.convention) {
        json pot = base.contains("potential") && base["potential"].is_object() ? base["potential"] : json::object();
        if (f.potential && pot.value("kind", "") != *f.potential) pot = {{"kind", *f.potential}};
        const std::pair<const char*, const std::optional<double>*> numbers[] = {
            {"A", &f.A}, {"B", &f.B}, {"C", &f.C}, {"D0", &f.D0}, {"r0", &f.r0}, {"a", &f.a}, {"b", &f.b}};
        for (auto [key, value] : numbers)
            if (*value) pot[key] = **value;
        if (f.convention) pot["convention"] = *f.convention;
        patch["potential"] = pot;
    }
    if (f.M) patch["units"]["M"] = *f.M;
    if (f.hbar) patch["units"]["hbar"] = *f.hbar;
    if (f.n_max) patch["ranges"]["n_max"] = *f.n_max;
    if (f.ell_max) patch["ranges"]["ell_max"] = *f.ell_max;
    if (!f.dims.empty()) patch["ranges"]["dims"] = f.dims;
    if (f.n) patch["channel"]["n"] = *f.n;
    if (f.ell) patch["channel"]["ell"] = *f.ell;
    if (f.dim) patch["channel"]["dim"] = *f.dim;
    if (f.r_min) patch["grid"]["r_min"] = *f.r_min;
    if (f.r_max) patch["grid"]["r_max"] = *f.r_max;
    if (f.points) patch["grid"]["points"] = *f.points;
    if (f.output) patch["output"]["path"] = *f.output;
    if (f.format) patch["output"]["format"] = *f.format;
    if (f.residual) patch["residual"] = true;
    if (f.coarsen) patch["coarsen"] = *f.coarsen;
    return patch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states, ladder algebra and finite-difference verification for Mie-type potentials"};
    app.require_subcommand(1);
    Flags f;

    auto* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    auto* wave = app.add_subcommand("wavefunction", "sampled radial eigenfunction");
    auto* ladder = app.add_subcommand("ladder-check", "SU(1,1) algebra and differential ladder report");
    auto* verify = app.add_subcommand("verify", "finite-difference oracle against the closed forms");
    auto* presets = app.add_subcommand("presets", "list potential presets");
    for (auto* sub : {spectrum, wave, ladder, verify, presets}) add_common(sub, f);
    wave->add_option("--n", f.n, "radial quantum number");
    wave->add_option("--ell", f.ell, "angular momentum");
    wave->add_option("--dim", f.dim, "space dimension N");
    wave->add_option("--r-min", f.r_min, "first grid point");
    wave->add_option("--r-max", f.r_max, "last grid point");
    wave->add_option("--points", f.points, "number of grid points");
    wave->add_flag("--residual", f.residual, "append the ODE residual column");
    verify->add_option("--coarsen", f.coarsen, "multiply every finite-difference spacing (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    RunConfig config;
    try {
        json doc = f.config_path.empty() ? json::object() : read_config_file(f.config_path);
        if (!doc.is_object()) throw config_error("config: top level must be an object");
        doc.merge_patch(build_patch(f, doc));
        config = parse_config(doc);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return exit_io;
    }
    if (f.dump_config) {
        std::cout << to_json(config).dump(2) << '\n';
        return exit_ok;
    }
    return run_command(command, config, std::cout, std::cerr);
}
