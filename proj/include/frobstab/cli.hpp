#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobstab {

// Runs the command line given argv-style arguments (program name excluded).
// Formatted output goes to `out` unless --out FILE redirects it; diagnostics
// go to `err`. Returns the process exit status: 0 all checks passed, 1 at
// least one clause failed, 2 usage error, 3 resource-cap refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frobstab
