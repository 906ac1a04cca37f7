#pragma once

#include <ostream>
#include <span>
#include <string>

namespace lorasic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCompute = 2;

/// Entry point behind the `lorasic` executable; argv[0] is the program name.
int run_cli(std::span<char const* const> argv, std::ostream& out, std::ostream& err);

} // namespace lorasic
