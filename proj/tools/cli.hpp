#pragma once

// Command-line front end. run() never exits the process and writes only to
// the given streams, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace enriques18::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Environment variable consulted when --golden-dir is absent.
inline constexpr const char* kGoldenDirEnv = "ENRIQUES18_GOLDEN_DIR";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enriques18::cli
