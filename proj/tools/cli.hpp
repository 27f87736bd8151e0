#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pi {

/// The `pi` command line, arguments excluding the program name. Returns the
/// exit code: 0 success, 1 domain failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pi
