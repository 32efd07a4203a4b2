#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padfeas {

/**
 * Run one command-line invocation. `args` is argv without the program name.
 * JSON results go to `out`, human diagnostics to `err`. Returns the process
 * exit code:
 *   0  feasible / valid / success
 *   1  infeasible / certificate rejected / no root found at depth
 *   2  unknown, a search or expansion budget was hit, or the randomized
 *      prime search gave up
 *   3  input error (bad flags, malformed polynomial/certificate/CNF)
 * Never throws; exit codes are total over arbitrary argument vectors.
 */
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padfeas
