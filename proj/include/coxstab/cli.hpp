#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxstab {

/// Command-line front end. Subcommands: star, sweep, w0, ribbon, reach,
/// verify-paper, recognize. Exit codes: 0 success / all checks pass,
/// 1 verification mismatch, 2 invalid input, 3 enumeration cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace coxstab
