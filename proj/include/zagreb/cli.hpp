#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zagreb {

// Command-line front door. Emits exactly one JSON document (or a JSON-lines
// stream) on out, diagnostics on err. Exit codes: 0 success (reports with
// violations are success), 2 input/validation error, 3 budget exceeded,
// 1 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zagreb
