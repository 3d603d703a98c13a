#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gurland::explorer {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitDegenerate = 3,
  kExitIo = 4,
  kExitViolation = 5,
};

/// Name of the environment variable pointing at a config file.
inline constexpr std::string_view kConfigEnvVar = "GURLAND_KIT_CONFIG";

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

/// Reads the process environment.
std::optional<std::string> process_environment(std::string_view name);

/// Runs one gurland-kit invocation. args excludes the program name. Reports
/// go to out, diagnostics and warnings to err; the return value is the exit
/// code. Settings resolve as flags, then the config file named by
/// GURLAND_KIT_CONFIG, then built-in defaults.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_environment);

}  // namespace gurland::explorer
