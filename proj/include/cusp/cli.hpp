#pragma once

#include <ostream>

namespace cusp::cli {

// Exit status: 0 success, 1 input error, 2 verification failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cusp::cli
