#pragma once

#include "mie/cli/config.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace mie::cli {

// Each command writes its artifact to output.path, to $MIE_OUTPUT_DIR/<name>
// when no path is set, or to `out` otherwise ("-" also means `out`).
// Diagnostics go to `err`. Return values follow ExitCode.

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_wavefunction(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_ladder_check(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_presets(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Dispatches by subcommand name and maps exceptions onto exit codes.
int run_command(std::string_view name, const RunConfig& c, std::ostream& out, std::ostream& err);

/// %.17g, with "nan" / "inf" spelled out.
std::string format_number(double v);

} // namespace mie::cli
