#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smw::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { ok = 0, input_error = 1, resource = 2, verification = 3 };

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a over the arguments, skipping --out and its value.
std::string config_hash(const std::vector<std::string>& args);

}  // namespace smw::cli
