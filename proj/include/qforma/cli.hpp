#pragma once

#include <iosfwd>

namespace qforma {

// Runs the command line front end and returns the process exit code:
//   0  a verdict or table was produced (negative mathematical verdicts such
//      as NO_Q_FORM are successful runs),
//   1  usage error or an input violating a documented hypothesis,
//   2  computation refused because the dimension cap was exceeded.
// Data goes to `out`; diagnostics go to `err` only.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qforma
