#pragma once

#include <iosfwd>

namespace hexbrace {

// Exit codes: 0 success, 1 domain failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexbrace
