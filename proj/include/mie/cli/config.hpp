#pragma once

// Run configuration shared by every subcommand. One JSON document; command
// line flags are applied on top of it as a merge patch.

#include "mie/potential.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mie::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1, // a verification ran but missed a tolerance
    exit_config = 2,
    exit_domain = 3,
    exit_io = 4,
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PotentialKind { raw, coulomb, kratzer_fues, modified_kratzer, mie };

std::string_view to_string(PotentialKind k);

struct PotentialSpec {
    PotentialKind kind = PotentialKind::coulomb;
    // raw
    double A = 0.0, B = -1.0, C = 0.0;
    // presets
    double D0 = 1.0, r0 = 1.0;
    double a = 2.0, b = 1.0;
    KratzerConvention convention = KratzerConvention::standard;

    bool operator==(const PotentialSpec&) const = default;
};

struct Units {
    double M = 1.0;
    double hbar = 1.0;

    bool operator==(const Units&) const = default;
};

struct Ranges {
    int n_max = 2;
    int ell_max = 1;
    std::vector<int> dims{3};

    bool operator==(const Ranges&) const = default;
};

struct Channel {
    int n = 0;
    int ell = 0;
    int dim = 3;

    bool operator==(const Channel&) const = default;
};

struct GridOverride {
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<int> points;

    bool operator==(const GridOverride&) const = default;
};

enum class Format { csv, json };

struct OutputSpec {
    std::optional<std::string> path;
    std::optional<Format> format;

    bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
    std::optional<PotentialSpec> potential;
    Units units;
    std::optional<Ranges> ranges;
    Channel channel;
    GridOverride grid;
    OutputSpec output;
    bool residual = false; // wavefunction: add the ODE residual column
    double coarsen = 1.0;  // verify: multiply every finite-difference spacing

    bool operator==(const RunConfig&) const = default;
};

/// Strict parse: unknown keys, wrong types and broken invariants throw
/// config_error.
RunConfig parse_config(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);

/// Reads and parses a file; unreadable files throw io_error, malformed JSON
/// throws config_error.
nlohmann::json read_config_file(const std::string& path);

/// Three-term parameters for the closed-form path, or the general Mie system.
/// (a, b) = (2, 1) in either order collapses to Kratzer-Fues.
AnyPotential resolve_potential(const PotentialSpec& spec, const Units& units);

} // namespace mie::cli
