#include "output.hpp"

#include "mie/cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace mie::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

Format pick_format(const RunConfig& c, Format fallback, bool csv_allowed) {
    const Format f = c.output.format.value_or(fallback);
    if (f == Format::csv && !csv_allowed) throw config_error("this command only writes JSON reports");
    return f;
}

void emit(const RunConfig& c, std::string_view default_stem, Format format, const std::string& content,
          std::ostream& out) {
    std::filesystem::path target;
    if (c.output.path) {
        if (*c.output.path == "-") {
            out << content;
            return;
        }
        target = *c.output.path;
    } else if (const char* dir = std::getenv("MIE_OUTPUT_DIR"); dir && *dir) {
        target = std::filesystem::path(dir) / (std::string(default_stem) + (format == Format::csv ? ".csv" : ".json"));
    } else {
        out << content;
        return;
    }
    std::ofstream file(target, std::ios::binary | std::ios::trunc);
    if (!file) throw io_error("cannot open '" + target.string() + "' for writing");
    file << content;
    file.flush();
    if (!file) throw io_error("write to '" + target.string() + "' failed");
}

} // namespace detail
} // namespace mie::cli
