#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sk {

// Runs one command line (without the program name). Returns 0 on success,
// 1 on a domain error (a JSON error record goes to err), 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sk
