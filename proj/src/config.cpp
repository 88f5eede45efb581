#include "mpga/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mpga {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("invalid value for " + key + ": '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("invalid boolean for " + key + ": '" + value + "'");
}

}  // namespace

Settings parse_config(std::string_view text) {
  Settings settings;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    settings[std::move(key)] = std::move(value);
  }
  return settings;
}

Settings read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

TieBreakKind parse_tie_break(std::string_view text) {
  if (text == "offspring") return TieBreakKind::OffspringFavoring;
  if (text == "uniform") return TieBreakKind::Uniform;
  if (text == "diversity") return TieBreakKind::DiversityImproving;
  throw ConfigError("tie-break must be offspring, uniform or diversity");
}

InitMode parse_init(std::string_view text) {
  if (text == "zeros") return InitMode::AllZeros;
  if (text == "random") return InitMode::UniformRandom;
  throw ConfigError("init must be zeros or random");
}

std::string_view to_string(TieBreakKind kind) {
  switch (kind) {
    case TieBreakKind::OffspringFavoring: return "offspring";
    case TieBreakKind::Uniform: return "uniform";
    case TieBreakKind::DiversityImproving: return "diversity";
  }
  return "offspring";
}

std::string_view to_string(InitMode mode) {
  return mode == InitMode::AllZeros ? "zeros" : "random";
}

void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value) {
  GaConfig& c = spec.base;
  if (key == "n") c.n = parse_number<std::size_t>(key, value);
  else if (key == "mu") c.mu = parse_number<std::size_t>(key, value);
  else if (key == "chi") c.chi = parse_number<double>(key, value);
  else if (key == "pc") c.p_c = parse_number<double>(key, value);
  else if (key == "tie-break") c.tie_break = parse_tie_break(value);
  else if (key == "init") c.init = parse_init(value);
  else if (key == "adaptive-pc") c.adaptive_pc = parse_bool(key, value);
  else if (key == "max-iterations") c.max_iterations = parse_number<std::uint64_t>(key, value);
  else if (key == "runs") spec.runs = parse_number<std::size_t>(key, value);
  else if (key == "seed") spec.base_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "trace-every") spec.trace_every = parse_number<std::uint64_t>(key, value);
  else if (key == "window-lo") spec.window_lo = parse_number<double>(key, value);
  else if (key == "window-hi") spec.window_hi = parse_number<double>(key, value);
  else if (key == "out") spec.out_dir = value;
  else if (key == "workers") spec.workers = parse_number<std::size_t>(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

void apply_settings(ExperimentSpec& spec, const Settings& settings) {
  for (const auto& [key, value] : settings) apply_setting(spec, key, value);
}

}  // namespace mpga
