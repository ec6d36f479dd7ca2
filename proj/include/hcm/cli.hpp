#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUndecidable = 2;

/// Runs one `hcm` invocation. `args` excludes the program name. The input
/// document is read from the named file or, when none is given, from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hcm::cli
