#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfcscan::cli {

/// Bad command line or config file; maps to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flat `key = value` settings with `#` comments. Only the keys listed in
/// known_keys() are accepted.
class RunConfig {
 public:
  [[nodiscard]] static RunConfig parse(std::string_view text);
  [[nodiscard]] static RunConfig load(const std::string& path);
  [[nodiscard]] static const std::map<std::string, std::string_view>& known_keys();

  [[nodiscard]] bool has(const std::string& key) const { return values_.contains(key); }
  [[nodiscard]] std::optional<std::string> text(const std::string& key) const;
  [[nodiscard]] std::optional<double> number(const std::string& key) const;
  [[nodiscard]] std::optional<long long> integer(const std::string& key) const;

  void set(const std::string& key, std::string value);

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace sfcscan::cli
