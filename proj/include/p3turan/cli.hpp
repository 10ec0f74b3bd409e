#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace p3turan {

// Batch front end.  Parses the argument vector (program name excluded),
// dispatches to the library, and writes reports to the given streams or to
// --out files.  Exit code contract: 0 all verdicts pass, 1 usage or I/O
// error, 2 verdict failure.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace p3turan
