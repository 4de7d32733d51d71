#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smallcover::cli {

/// Runs one subcommand. Returns 0 on success, 1 on analysis failure, 2 on bad
/// input. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smallcover::cli
