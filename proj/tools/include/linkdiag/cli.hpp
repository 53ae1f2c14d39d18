#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkdiag {

/// Runs one command line (without the program name). Exit status: 0 on
/// success, 1 for domain errors (type or shape mismatch, failing suite rows),
/// 2 for unparsable input, bad arguments or unreadable files.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linkdiag
