#pragma once

#include <ostream>

namespace toricq {

/// Exit codes: 0 success, 1 a hypothesis failed, 2 malformed input.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricq
