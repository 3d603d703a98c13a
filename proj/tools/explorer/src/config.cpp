#include "gurland/explorer/config.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>

#include "gurland/errors.hpp"

namespace gurland::explorer {
namespace {

constexpr std::array<std::string_view, 9> kKnownKeys = {
    "m", "tol", "out", "format", "x-range", "y-range", "scale", "columns", "threads"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& in, std::string_view source) {
  ConfigFile config;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto where = std::string(source) + ":" + std::to_string(number);
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError(where + ": expected key = value");
    }
    const std::string key(trim(text.substr(0, eq)));
    const std::string value(trim(text.substr(eq + 1)));
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw DomainError(where + ": unknown key '" + key + "'");
    }
    config.values_[key] = value;
  }
  return config;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  return parse(in, path.string());
}

std::optional<std::string> ConfigFile::get(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

}  // namespace gurland::explorer
