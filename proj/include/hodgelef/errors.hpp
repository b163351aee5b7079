#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hodgelef {

// Malformed input: dimensions that do not match the frame, missing blocks,
// unparsable scalars. The CLI maps this to exit code 2.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (odd middle degree, a morphic
// conjecture hypothesis that does not hold, ...). Exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One named pass/fail line of a validation run.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace hodgelef
