#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolsolve {

/// Runs the command line front end. `args` excludes the program name.
/// Returns 0 on success or a true answer, 1 for no solution or a false
/// answer, 2 for usage and input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace boolsolve
