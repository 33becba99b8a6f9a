#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cauchon::cli {

// Dispatches one subcommand. Exit codes: 0 success, 1 negative mathematical
// result (invalid diagram, verification violation, method mismatch),
// 2 usage or parse error, 3 resource cap exceeded. Output is deterministic:
// identical inputs produce identical bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cauchon::cli
