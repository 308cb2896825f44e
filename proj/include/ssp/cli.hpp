#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssp::cli {

// Dispatches one command line (without the program name).  Writes the JSON
// result document to `out`; returns the process exit code: 0 on success, 2
// on domain/usage errors (with a machine-readable error object), 3 on
// resource-cap errors.  `in` feeds `--in -`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out);

}  // namespace ssp::cli
