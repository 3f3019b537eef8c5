#pragma once

#include <iosfwd>

namespace sepchain {

// Full command-line surface. Data goes to `out`, diagnostics to `err`.
// Returns 0 on success, 1 on usage/validation/file errors, 2 on internal
// errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sepchain
