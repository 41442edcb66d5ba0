#pragma once

#include <string>
#include <vector>

namespace hexbrace {

struct Violation {
  std::string clause;   // short tag of the violated condition
  std::string message;  // human-readable detail
};

struct Diagnostics {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string clause, std::string message) {
    violations.push_back({std::move(clause), std::move(message)});
  }
  void append(const Diagnostics& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  bool has_clause(const std::string& clause) const {
    for (const auto& v : violations) {
      if (v.clause == clause) return true;
    }
    return false;
  }
  std::string summary() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v.clause + ": " + v.message;
    }
    return out;
  }
};

}  // namespace hexbrace
