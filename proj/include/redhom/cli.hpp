#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redhom {

inline constexpr const char* kToolName = "redhom";
inline constexpr const char* kVersion = "0.1.0";

/// Runs one command. The JSON report goes to `out`, a short human summary to
/// `err`. Exit codes: 0 ok, 1 a check came out false (suite/check), 2 bad
/// input or refused construction, 3 internal invariant failure.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace redhom
