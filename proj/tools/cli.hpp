#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace saddle::cli {

/// Runs one `sp` invocation. `args` excludes the program name.
/// Returns the process exit status.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saddle::cli
