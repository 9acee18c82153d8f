#pragma once

#include <iosfwd>

namespace divlab::cli {

/// Entry point of the divlab command. Exit codes: 0 pass, 1 a checked
/// property failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace divlab::cli
