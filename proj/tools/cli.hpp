#pragma once

#include <iosfwd>

namespace cdlab::cli {

// Exit codes: 0 success, 2 config/usage error, 3 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdlab::cli
