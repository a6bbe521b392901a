#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dwlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point shared by the executable and the tests. `args[0]` is the
/// program name. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dwlab::cli
