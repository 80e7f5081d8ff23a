#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cosetal/finite_algebra.hpp"

namespace cosetal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Reports go to `out`, diagnostics to
/// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A short name such as "Z4", "Z2xZ2", "L2" or "Z2+inf" when the monoid is
/// isomorphic to a small standard one, otherwise "order-n monoid".
std::string describe_monoid(const FiniteMonoid& m);

}  // namespace cosetal
