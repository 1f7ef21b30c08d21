#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multibase::cli {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUndecided = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multibase::cli
