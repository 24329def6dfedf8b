#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xyness::cli {

// Runs one CLI invocation. Exit codes: 0 ok, 1 computation or validation
// failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a:b:step" (inclusive) or "v1,v2,..."
std::vector<double> parse_real_grid(const std::string& spec);
// "a:b" (inclusive, unit step), "a:b:step" or "v1,v2,..."
std::vector<int> parse_int_grid(const std::string& spec);

// %.17g
std::string format_double(double v);

} // namespace xyness::cli
