#pragma once

#include <iosfwd>

namespace bipmc::cli {

// Exit codes: 0 success, 1 negative verdict, 2 error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bipmc::cli
