#pragma once

#include <iosfwd>

namespace maxips {

// Runs one CLI invocation. Exit status: 0 success, 1 domain or parse error,
// 2 usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace maxips
