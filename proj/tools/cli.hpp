#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corners::cli {

// Exit codes: 0 success, 1 negative verdict or violated invariant, 2 bad input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace corners::cli
