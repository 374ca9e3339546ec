#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace urm::cli {

/// Runs one urmatch invocation. `args` excludes the program name. Returns
/// the process exit code: 0 success, 1 computational failure or audit
/// violation, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace urm::cli
