#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edr::cli {

/// Entry point minus the process: `args` excludes the program name. Returns
/// the exit code (0 success/holds, 1 negative verdict or unsupported,
/// 2 parse/usage error) and never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edr::cli
