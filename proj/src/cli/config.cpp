#include "mie/cli/config.hpp"

#include "mie/errors.hpp"

#include <cmath>
#include <fstream>

namespace mie::cli {

using nlohmann::json;

namespace {

const std::pair<PotentialKind, std::string_view> kind_names[] = {
    {PotentialKind::raw, "raw"},
    {PotentialKind::coulomb, "coulomb"},
    {PotentialKind::kratzer_fues, "kratzer_fues"},
    {PotentialKind::modified_kratzer, "modified_kratzer"},
    {PotentialKind::mie, "mie"},
};

void only_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) throw config_error(std::string(where) + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) throw config_error(std::string(where) + ": unknown key '" + key + "'");
    }
}

template <class T>
T get(const json& j, std::string_view where, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error(std::string(where) + "." + key + ": wrong type");
    }
}

double finite(double v, std::string_view what) {
    if (!std::isfinite(v)) throw config_error(std::string(what) + " must be finite");
    return v;
}

PotentialSpec parse_potential(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw config_error("potential: 'kind' is required");
    const auto name = get<std::string>(j, "potential", "kind", "");
    PotentialSpec s;
    bool found = false;
    for (auto [k, n] : kind_names)
        if (n == name) {
            s.kind = k;
            found = true;
        }
    if (!found) throw config_error("potential.kind: unknown kind '" + name + "'");
    switch (s.kind) {
    case PotentialKind::raw:
        only_keys(j, "potential", {"kind", "A", "B", "C"});
        s.A = get(j, "potential", "A", 0.0);
        s.B = get(j, "potential", "B", 0.0);
        s.C = get(j, "potential", "C", 0.0);
        break;
    case PotentialKind::coulomb:
        only_keys(j, "potential", {"kind", "B"});
        s.B = get(j, "potential", "B", -1.0);
        break;
    case PotentialKind::kratzer_fues:
        only_keys(j, "potential", {"kind", "D0", "r0"});
        s.D0 = get(j, "potential", "D0", 1.0);
        s.r0 = get(j, "potential", "r0", 1.0);
        break;
    case PotentialKind::modified_kratzer: {
        only_keys(j, "potential", {"kind", "D0", "r0", "convention"});
        s.D0 = get(j, "potential", "D0", 1.0);
        s.r0 = get(j, "potential", "r0", 1.0);
        const auto conv = get<std::string>(j, "potential", "convention", "standard");
        if (conv == "standard") s.convention = KratzerConvention::standard;
        else if (conv == "inverted") s.convention = KratzerConvention::inverted;
        else throw config_error("potential.convention: expected 'standard' or 'inverted'");
        break;
    }
    case PotentialKind::mie:
        only_keys(j, "potential", {"kind", "D0", "r0", "a", "b"});
        s.D0 = get(j, "potential", "D0", 1.0);
        s.r0 = get(j, "potential", "r0", 1.0);
        s.a = get(j, "potential", "a", 2.0);
        s.b = get(j, "potential", "b", 1.0);
        break;
    }
    for (double v : {s.A, s.B, s.C, s.D0, s.r0, s.a, s.b}) finite(v, "potential parameters");
    // construct once so parameter errors surface as config errors
    try {
        resolve_potential(s, Units{});
    } catch (const mie::domain_error& e) {
        throw config_error(std::string("potential: ") + e.what());
    }
    return s;
}

json potential_json(const PotentialSpec& s) {
    json j{{"kind", to_string(s.kind)}};
    switch (s.kind) {
    case PotentialKind::raw:
        j["A"] = s.A;
        j["B"] = s.B;
        j["C"] = s.C;
        break;
    case PotentialKind::coulomb:
        j["B"] = s.B;
        break;
    case PotentialKind::kratzer_fues:
        j["D0"] = s.D0;
        j["r0"] = s.r0;
        break;
    case PotentialKind::modified_kratzer:
        j["D0"] = s.D0;
        j["r0"] = s.r0;
        j["convention"] = mie::to_string(s.convention);
        break;
    case PotentialKind::mie:
        j["D0"] = s.D0;
        j["r0"] = s.r0;
        j["a"] = s.a;
        j["b"] = s.b;
        break;
    }
    return j;
}

} // namespace

std::string_view to_string(PotentialKind k) {
    for (auto [kind, name] : kind_names)
        if (kind == k) return name;
    return "?";
}

RunConfig parse_config(const json& j) {
    only_keys(j, "config", {"potential", "units", "ranges", "channel", "grid", "output", "residual", "coarsen"});
    RunConfig c;
    if (j.contains("potential") && !j.at("potential").is_null()) c.potential = parse_potential(j.at("potential"));

    if (j.contains("units")) {
        const json& u = j.at("units");
        only_keys(u, "units", {"M", "hbar"});
        c.units.M = finite(get(u, "units", "M", 1.0), "units.M");
        c.units.hbar = finite(get(u, "units", "hbar", 1.0), "units.hbar");
        if (!(c.units.M > 0.0) || !(c.units.hbar > 0.0)) throw config_error("units: M and hbar must be positive");
    }

    if (j.contains("ranges") && !j.at("ranges").is_null()) {
        const json& r = j.at("ranges");
        only_keys(r, "ranges", {"n_max", "ell_max", "dims"});
        Ranges out;
        out.n_max = get(r, "ranges", "n_max", out.n_max);
        out.ell_max = get(r, "ranges", "ell_max", out.ell_max);
        out.dims = get(r, "ranges", "dims", out.dims);
        if (out.n_max < 0 || out.ell_max < 0) throw config_error("ranges: n_max and ell_max must be non-negative");
        for (int d : out.dims)
            if (d < 2) throw config_error("ranges.dims: every N must be >= 2");
        c.ranges = out;
    }

    if (j.contains("channel")) {
        const json& ch = j.at("channel");
        only_keys(ch, "channel", {"n", "ell", "dim"});
        c.channel.n = get(ch, "channel", "n", 0);
        c.channel.ell = get(ch, "channel", "ell", 0);
        c.channel.dim = get(ch, "channel", "dim", 3);
        if (c.channel.n < 0 || c.channel.ell < 0 || c.channel.dim < 2)
            throw config_error("channel: need n >= 0, ell >= 0, dim >= 2");
    }

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        only_keys(g, "grid", {"r_min", "r_max", "points"});
        if (g.contains("r_min")) c.grid.r_min = get(g, "grid", "r_min", 0.0);
        if (g.contains("r_max")) c.grid.r_max = get(g, "grid", "r_max", 0.0);
        if (g.contains("points")) c.grid.points = get(g, "grid", "points", 0);
        if (c.grid.r_min && !(*c.grid.r_min > 0.0)) throw config_error("grid.r_min must be positive");
        if (c.grid.r_max && !std::isfinite(*c.grid.r_max)) throw config_error("grid.r_max must be finite");
        if (c.grid.r_min && c.grid.r_max && !(*c.grid.r_max > *c.grid.r_min))
            throw config_error("grid.r_max must exceed grid.r_min");
        if (c.grid.points && *c.grid.points < 5) throw config_error("grid.points must be at least 5");
    }

    if (j.contains("output")) {
        const json& o = j.at("output");
        only_keys(o, "output", {"path", "format"});
        if (o.contains("path") && !o.at("path").is_null()) c.output.path = get<std::string>(o, "output", "path", "");
        if (o.contains("format") && !o.at("format").is_null()) {
            const auto f = get<std::string>(o, "output", "format", "");
            if (f == "csv") c.output.format = Format::csv;
            else if (f == "json") c.output.format = Format::json;
            else throw config_error("output.format: expected 'csv' or 'json'");
        }
    }

    c.residual = get(j, "config", "residual", false);
    c.coarsen = finite(get(j, "config", "coarsen", 1.0), "coarsen");
    if (!(c.coarsen > 0.0)) throw config_error("coarsen must be positive");
    return c;
}

json to_json(const RunConfig& c) {
    json j;
    j["potential"] = c.potential ? potential_json(*c.potential) : json(nullptr);
    j["units"] = {{"M", c.units.M}, {"hbar", c.units.hbar}};
    j["ranges"] = c.ranges ? json{{"n_max", c.ranges->n_max}, {"ell_max", c.ranges->ell_max}, {"dims", c.ranges->dims}}
                           : json(nullptr);
    j["channel"] = {{"n", c.channel.n}, {"ell", c.channel.ell}, {"dim", c.channel.dim}};
    json g = json::object();
    if (c.grid.r_min) g["r_min"] = *c.grid.r_min;
    if (c.grid.r_max) g["r_max"] = *c.grid.r_max;
    if (c.grid.points) g["points"] = *c.grid.points;
    j["grid"] = g;
    json o = json::object();
    if (c.output.path) o["path"] = *c.output.path;
    if (c.output.format) o["format"] = *c.output.format == Format::csv ? "csv" : "json";
    j["output"] = o;
    j["residual"] = c.residual;
    j["coarsen"] = c.coarsen;
    return j;
}

json read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("config file '" + path + "': " + e.what());
    }
}

AnyPotential resolve_potential(const PotentialSpec& s, const Units& u) {
    switch (s.kind) {
    case PotentialKind::raw: {
        PotentialParams p{s.A, s.B, s.C, u.M, u.hbar};
        p.validate();
        return p;
    }
    case PotentialKind::coulomb:
        return coulomb(s.B, u.M, u.hbar);
    case PotentialKind::kratzer_fues:
        return kratzer_fues(s.D0, s.r0, u.M, u.hbar);
    case PotentialKind::modified_kratzer:
        return modified_kratzer(s.D0, s.r0, u.M, u.hbar, s.convention);
    case PotentialKind::mie:
        if ((s.a == 2.0 && s.b == 1.0) || (s.a == 1.0 && s.b == 2.0)) return kratzer_fues(s.D0, s.r0, u.M, u.hbar);
        MieSystem m{{s.D0, s.r0, s.a, s.b}, u.M, u.hbar};
        m.preset.validate();
        return m;
    }
    throw config_error("unknown potential kind");
}

} // namespace mie::cli
