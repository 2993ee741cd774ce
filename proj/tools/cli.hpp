#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hedgeres {

/// Runs one `hedgeres` command. `args` excludes the program name. Returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace hedgeres
