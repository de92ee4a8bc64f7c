#ifndef DEGREELAB_CLI_HPP
#define DEGREELAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace degreelab::cli {

/// Runs one CLI invocation.  `args` excludes the program name.
/// Exit codes: 0 success, 2 configuration error, 3 resolution or
/// under-convergence error, 4 internal consistency error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace degreelab::cli

#endif
