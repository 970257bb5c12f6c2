#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pp {

// Full command-line surface. args excludes the program name. Results go to
// out, diagnostics to err. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pp
