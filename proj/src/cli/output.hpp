#pragma once

#include "mie/cli/config.hpp"

#include <json.hpp>

#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mie::cli::detail {

/// Writes `content` to the configured destination; throws io_error.
void emit(const RunConfig& c, std::string_view default_stem, Format format, const std::string& content,
          std::ostream& out);

Format pick_format(const RunConfig& c, Format fallback, bool csv_allowed);

inline nlohmann::json number(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

} // namespace mie::cli::detail
