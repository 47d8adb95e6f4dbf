#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace twistps {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
  }
  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.title + ": " + c.name, c.pass, c.detail});
  }
};

}  // namespace twistps
