#pragma once

#include <istream>
#include <optional>
#include <string>

#include "czeta/numeric/zeta_numeric.hpp"

namespace czeta::cli {

/// Environment variable naming a config file when --config is absent.
inline constexpr const char* kConfigEnvVar = "CZETA_CONFIG";

struct Settings {
    NumericConfig numeric;
    ContourSpec contour;
};

/// Applies `key = value` lines onto `settings`. Blank lines and lines
/// starting with '#' are skipped. Keys:
///   em_terms_N em_terms_J target_tol radius x_max panels_ray panels_arc
///   reflect_left nodes_per_panel refine_tol max_refinements
/// Throws InvalidConfig on an unknown key or a malformed value.
void apply_config(std::istream& in, Settings& settings);

/// apply_config on a file. Throws InvalidConfig if it cannot be opened.
void apply_config_file(const std::string& path, Settings& settings);

/// The explicit path if given, else the environment variable, else none.
std::optional<std::string> config_path(const std::optional<std::string>& explicit_path);

}  // namespace czeta::cli
