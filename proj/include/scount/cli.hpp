#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scount {

enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitNumerical = 2, kExitUsage = 3 };

/// Runs the command line `args` (program name first). Results go to `out`
/// as JSON, one document per input graph; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace scount
