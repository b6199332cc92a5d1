#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcx::cli {

/// Runs the mcx command line with `args` (program name excluded). Returns
/// 0 on success, 1 on usage or domain errors, 2 when a verification fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcx::cli
