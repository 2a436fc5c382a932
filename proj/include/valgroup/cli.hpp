#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valgroup::cli {

/// Exit codes: 0 = all checks passed, 1 = violation or refutation found,
/// 2 = usage or spec error, 3 = capacity / bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valgroup::cli
