#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace smw {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct BoundReport {
  std::vector<Check> checks;
  std::vector<std::string> flags;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace smw
