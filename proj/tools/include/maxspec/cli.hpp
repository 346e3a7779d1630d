#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxspec::cli {

// Runs the command line. Exit codes: 0 ok, 1 invalid input / usage error,
// 2 property failure (a sweep found a counterexample).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxspec::cli
