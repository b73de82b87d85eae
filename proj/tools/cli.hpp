#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wienerlab::cli {

// Exit status: 0 success, 1 domain error or failed verification, 2 usage
// error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wienerlab::cli
