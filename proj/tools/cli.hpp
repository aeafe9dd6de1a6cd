#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitcount {

// Full command-line front end. args excludes the program name. Returns the
// process exit code: 0 on success, 2 on parse/validation problems, 3 when a
// request is structurally sound but infeasible (field too small, size
// mismatch, enumeration over the scale cap), 1 when a verification sweep or
// identity check finds an actual mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitcount
