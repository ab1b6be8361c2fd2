#pragma once

#include <iosfwd>

namespace als::cli {

/// Entry point for the alsearch command line. Returns 0 on success, 2 on a
/// usage error and 1 on a domain or I/O error; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace als::cli
