#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cra {

// Runs one CLI invocation. Returns the process exit status: 0 when all
// checks pass, 1 when a check fails (or a search finds nothing), 2 on usage
// or input errors. All report output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cra
