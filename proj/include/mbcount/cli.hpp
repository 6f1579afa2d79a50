#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbcount::cli {

// Runs the mbcount command line (args exclude the program name) against the
// given streams. Returns 0 on success, 1 when a verify run found a mismatch,
// 2 on usage errors or refused/infeasible requests. Value output goes to
// out; diagnostics and wall times go to err so out is reproducible.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mbcount::cli
