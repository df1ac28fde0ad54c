#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zzl::cli {

/// Exit statuses.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zzl::cli
