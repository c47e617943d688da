#pragma once

namespace pbasic {

// Command-line front end.  Returns the process exit code: 0 for success or a
// positive verification verdict, 1 for a negative verdict (with a witness on
// stdout), 2 for usage errors, malformed input, or out-of-range parameters.
int run_cli(int argc, const char* const* argv);

}  // namespace pbasic
