// Command-line front end.
//
// run() parses argv into a Job and executes it, writing results to the given
// streams.  Exit codes: 0 success, 1 domain error (valid syntax, invalid
// mathematics), 2 parse/usage error, 3 self-check counterexample.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptab::cli {

// argv excludes the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ptab::cli
