#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfca::cli {

// Whole command-line pipeline, callable in-process so tests can capture
// output byte for byte. args excludes the program name. Returns the exit
// status: 0 ok, 1 domain failure, 2 usage.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tfca::cli
