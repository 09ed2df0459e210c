#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clq::cli {

/// Runs one subcommand. args excludes the program name. Returns 0 when the
/// report passes, 1 when it fails and 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clq::cli
