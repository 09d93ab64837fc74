#pragma once

#include <string>
#include <vector>

namespace hypfan {

/// One named pass/fail outcome of a check.
struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
};

bool all_pass(const std::vector<Verdict>& verdicts);

/// Appends a verdict and returns its outcome.
bool check(std::vector<Verdict>& verdicts, std::string name, bool pass, std::string detail = {});

}  // namespace hypfan
