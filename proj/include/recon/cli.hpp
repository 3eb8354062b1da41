#pragma once

// Command-line surface: enumerate, stats, ball, intersect (with the subset
// partition), delta, simulate, decode, verify.

#include <iosfwd>
#include <string>
#include <vector>

namespace recon::cli {

/// Dispatch one invocation. Returns 0 on success or a passing verification,
/// 1 on a verification or decode failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recon::cli
