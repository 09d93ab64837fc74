#pragma once

#include <iosfwd>

namespace hypfan::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hypfan::cli
