#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktrans {

// Runs one command line (without the program name). Returns 0 when every
// verdict passes, 1 on a failure or reported discrepancy, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktrans
