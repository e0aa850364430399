#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwkit {

/// Exit codes: 0 success or accept, 1 reject, 2 usage or input error.
inline constexpr int kExitAccept = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the mwkit tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwkit
