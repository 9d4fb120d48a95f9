#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace caycodes {

// Command-line front end. args excludes the program name. Returns the exit
// status: 0 on success (and for verify runs with no discrepancies), 1 when a
// verify run found discrepancies, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace caycodes
