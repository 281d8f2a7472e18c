#pragma once

#include <iosfwd>

namespace cdp::cli {

/// Run the command-line tool.  Exit codes: 0 success, 1 domain error (with a
/// machine-readable error object on err), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdp::cli
