#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace renlib::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace renlib::cli
