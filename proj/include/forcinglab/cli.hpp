#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forcinglab {

/// Dispatches one CLI invocation (arguments without the program name).
/// Reports are byte-deterministic for fixed inputs. Returns the process
/// exit code: 0 success/pass, 1 failed property or negative query, 2 input
/// error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace forcinglab
