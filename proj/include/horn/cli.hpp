#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horn {

// Batch front end.  Exit codes: 0 success (for `ce`: equivalent), 1 `ce`
// found the formulas not equivalent, 2 usage/parse errors, 3 `minimize
// --same-alphabet` on cyclic input (report-only output).
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace horn
