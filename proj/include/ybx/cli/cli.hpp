#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybx::cli {

/// Runs one `ybx` invocation. `args` excludes the program name.
/// Returns 0 when every report passes, 1 when any fails, 2 on usage or
/// input errors (diagnostics go to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybx::cli
