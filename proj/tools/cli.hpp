#pragma once

#include <string>
#include <vector>

namespace grmin::cli {

/// Executes one subcommand: certify | minimize | reconstruct | qfamily |
/// breduce | orbits | relations. Writes a JSON document (manifest +
/// report) to --out or standard output.
///
/// Exit code: 0 on pass, 1 on a failed check, 2 on usage or domain errors.
int run(int argc, const char* const* argv);

/// Same, from an argument list without the program name.
int run(const std::vector<std::string>& args);

}  // namespace grmin::cli
