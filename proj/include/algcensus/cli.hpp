#pragma once

namespace algcensus::cli {

// Entry point for the algcensus command line tool.  Returns the process
// exit code: 0 success, 2 invalid arguments, 3 workload outside the
// supported envelope without --force.
int run(int argc, char** argv);

}  // namespace algcensus::cli
