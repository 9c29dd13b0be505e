#pragma once

#include <iosfwd>

namespace mindenom {

// Exit codes: 0 success, 2 parse/validation, 3 budget, 4 verification
// failure (interior-regime mismatch or method disagreement), 1 internal.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mindenom
