#include "sfcscan/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sfcscan::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

const std::map<std::string, std::string_view>& RunConfig::known_keys() {
  static const std::map<std::string, std::string_view> keys{
      {"window_side", "side of the square sampling window"},
      {"grid_order", "grid order m (2^m samples per side)"},
      {"moment_x", "dipole moment x component (all four dipoles)"},
      {"moment_y", "dipole moment y component"},
      {"moment_z", "dipole moment z component"},
      {"plane_z", "height of the sampling plane"},
      {"mode", "autocorrelation estimator: pearson | raw"},
      {"k_max", "largest autocorrelation lag"},
      {"scan_a", "linear scan kind"},
      {"scan_b", "space-filling scan kind"},
      {"component", "field component: Hx | Hy | Hz"},
      {"gamma", "resonance frequency per unit field"},
      {"linewidth", "Lorentzian half-width"},
      {"sweep_min", "lowest swept rf frequency"},
      {"sweep_max", "highest swept rf frequency"},
      {"sweep_step", "rf sweep step"},
      {"strip_field", "z-field added by each strip"},
      {"seed", "splitmix64 seed"},
  };
  return keys;
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string value(trim(view.substr(eq + 1)));
    if (!known_keys().contains(key)) {
      throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (value.empty()) {
      throw UsageError("config line " + std::to_string(line_no) + ": empty value for '" + key +
                       "'");
    }
    if (config.has(key)) {
      throw UsageError("config line " + std::to_string(line_no) + ": duplicate key '" + key +
                       "'");
    }
    config.values_[key] = value;
  }
  return config;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::optional<std::string> RunConfig::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> RunConfig::number(const std::string& key) const {
  const auto s = text(key);
  if (!s) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(s->data(), s->data() + s->size(), v);
  if (res.ec != std::errc{} || res.ptr != s->data() + s->size() || !std::isfinite(v)) {
    throw UsageError("config key '" + key + "' is not a finite number: " + *s);
  }
  return v;
}

std::optional<long long> RunConfig::integer(const std::string& key) const {
  const auto s = text(key);
  if (!s) return std::nullopt;
  long long v = 0;
  const auto res = std::from_chars(s->data(), s->data() + s->size(), v);
  if (res.ec != std::errc{} || res.ptr != s->data() + s->size()) {
    throw UsageError("config key '" + key + "' is not an integer: " + *s);
  }
  return v;
}

void RunConfig::set(const std::string& key, std::string value) {
  if (!known_keys().contains(key)) throw UsageError("unknown key '" + key + "'");
  values_[key] = std::move(value);
}

}  // namespace sfcscan::cli
