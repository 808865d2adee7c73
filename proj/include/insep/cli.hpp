#pragma once

#include <iosfwd>

namespace insep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `insep` tool. Exit 0 on success, 2 on usage or
/// validation errors, 1 if the criterion contradicts the path oracle.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace insep
