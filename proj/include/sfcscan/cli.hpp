#pragma once

#include <iosfwd>

namespace sfcscan::cli {

/// Entry point for the sfcscan tool. Data goes to `out` (or --out), errors to
/// `err`. Returns 0 on success, 1 on usage or parse errors, 2 on numeric or
/// domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfcscan::cli
