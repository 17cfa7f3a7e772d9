#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ciqcc/engine.hpp"

namespace ciqcc {

inline constexpr std::string_view kEnvPrefix = "CLIFFORD_IQCC_";

/// Sets one RunConfig field by name (the field names of RunConfig, plus
/// the short forms eps, max_iter, select, max_rank, multi_gen).
/// Throws ArgumentError for unknown keys or bad values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// key = value lines; '#' and ';' start comments, [section] headers are
/// ignored. Throws ParseError with the line number.
void apply_config_text(RunConfig& cfg, std::string_view text);

/// Applies every CLIFFORD_IQCC_<KEY> variable found in `env` (key
/// matched case-insensitively against the setting names).
void apply_environment(RunConfig& cfg, const std::map<std::string, std::string>& env);

/// Snapshot of the process environment restricted to the prefix.
std::map<std::string, std::string> prefixed_environment();

}  // namespace ciqcc
