#include "ciqcc/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ciqcc/errors.hpp"

extern char** environ;

namespace ciqcc {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\"'");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\"'");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

double parse_real(std::string_view key, const std::string& v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw ArgumentError("setting '" + std::string(key) + "' needs a number, got '" + v + "'");
  }
  return out;
}

int parse_int(std::string_view key, const std::string& v) {
  int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw ArgumentError("setting '" + std::string(key) + "' needs an integer, got '" + v + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, const std::string& v) {
  const std::string l = lower(v);
  if (l == "1" || l == "true" || l == "yes" || l == "on") return true;
  if (l == "0" || l == "false" || l == "no" || l == "off") return false;
  throw ArgumentError("setting '" + std::string(key) + "' needs a boolean, got '" + v + "'");
}

}  // namespace

void apply_setting(RunConfig& cfg, std::string_view key_in, std::string_view value_in) {
  const std::string key = lower(std::string(key_in));
  const std::string v = trim(value_in);
  if (key == "mapping") {
    cfg.mapping = parse_mapping(lower(v));
  } else if (key == "epsilon_conv" || key == "eps") {
    cfg.epsilon_conv = parse_real(key, v);
  } else if (key == "max_iterations" || key == "max_iter") {
    cfg.max_iterations = parse_int(key, v);
  } else if (key == "selection" || key == "selection_mode" || key == "select") {
    cfg.selection = parse_selection(lower(v));
  } else if (key == "prune_eps") {
    cfg.prune_eps = parse_real(key, v);
  } else if (key == "max_candidate_rank" || key == "max_rank") {
    if (v.empty() || lower(v) == "none") {
      cfg.max_candidate_rank.reset();
    } else {
      cfg.max_candidate_rank = parse_int(key, v);
    }
  } else if (key == "compression" || key == "compress") {
    cfg.compression = parse_bool(key, v);
  } else if (key == "multi_generator" || key == "multi_gen") {
    // Boolean spellings pick the default pair size.
    const std::string l = lower(v);
    if (l == "true" || l == "yes" || l == "on") {
      cfg.multi_generator = 2;
    } else if (l == "false" || l == "no" || l == "off") {
      cfg.multi_generator = 1;
    } else {
      cfg.multi_generator = parse_int(key, v);
    }
  } else if (key == "gradient_threshold") {
    cfg.gradient_threshold = parse_real(key, v);
  } else if (key == "parallel") {
    cfg.parallel = parse_bool(key, v);
  } else {
    throw ArgumentError("unknown setting '" + std::string(key_in) + "'");
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto cut = line.find_first_of("#;");
    if (cut != std::string::npos) line.erase(cut);
    const std::string t = trim(line);
    if (t.empty() || t.front() == '[') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
    try {
      apply_setting(cfg, trim(t.substr(0, eq)), t.substr(eq + 1));
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
}

void apply_environment(RunConfig& cfg, const std::map<std::string, std::string>& env) {
  for (const auto& [name, value] : env) {
    if (name.rfind(kEnvPrefix, 0) != 0) continue;
    apply_setting(cfg, name.substr(kEnvPrefix.size()), value);
  }
}

std::map<std::string, std::string> prefixed_environment() {
  std::map<std::string, std::string> out;
  for (char** e = environ; e && *e; ++e) {
    const std::string_view kv(*e);
    if (kv.rfind(kEnvPrefix, 0) != 0) continue;
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) continue;
    out.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
  }
  return out;
}

}  // namespace ciqcc
