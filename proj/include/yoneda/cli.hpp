#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yoneda {

// Runs one yoneda-lab invocation. `args` excludes the program name. The JSON
// report goes to `out` (or to the --out file when given), a short human summary
// goes to `err`. Returns the process exit code: 0 when every check passed, 1 when
// a property check failed, 2 on invalid input (bad flags, unreadable instance,
// malformed file), 3 on an internal engine defect.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yoneda
