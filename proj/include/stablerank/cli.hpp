#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stablerank {

/// Entry point of the `stablerank` command, minus the program name.
/// Returns 0 on success, 1 when a verify suite has failures, 2 on usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stablerank
