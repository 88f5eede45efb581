#pragma once
// Flat `key = value` configuration files. Keys are the long CLI flag names
// without the leading dashes; '#' starts a comment.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "mpga/engine.hpp"
#include "mpga/harness.hpp"

namespace mpga {

using Settings = std::map<std::string, std::string>;

/// Throws IoError if the file cannot be read, ConfigError on malformed lines.
Settings read_config_file(const std::filesystem::path& path);
Settings parse_config(std::string_view text);

/// Applies one setting. Throws ConfigError on unknown keys or bad values.
void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value);
void apply_settings(ExperimentSpec& spec, const Settings& settings);

TieBreakKind parse_tie_break(std::string_view text);
InitMode parse_init(std::string_view text);
std::string_view to_string(TieBreakKind kind);
std::string_view to_string(InitMode mode);

}  // namespace mpga
