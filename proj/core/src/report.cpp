#include "hypfan/report.hpp"

#include <algorithm>

namespace hypfan {

bool all_pass(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

bool check(std::vector<Verdict>& verdicts, std::string name, bool pass, std::string detail) {
  verdicts.push_back({std::move(name), pass, std::move(detail)});
  return pass;
}

}  // namespace hypfan
