#pragma once

#include <iosfwd>

namespace qtree {

/// Exit codes: 0 ok, 1 some check failed, 2 usage or input error, 3 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtree
