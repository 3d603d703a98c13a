#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gurland::explorer {

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings from a key = value file. Blank lines and lines starting with '#'
/// are ignored; keys are the long option names without dashes.
class ConfigFile {
 public:
  /// Throws DomainError on malformed lines or unknown keys.
  static ConfigFile parse(std::istream& in, std::string_view source);
  /// Throws IoError if the file cannot be opened.
  static ConfigFile load(const std::filesystem::path& path);

  [[nodiscard]] std::optional<std::string> get(std::string_view key) const;
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace gurland::explorer
