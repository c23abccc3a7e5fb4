#pragma once

#include <string>
#include <vector>

namespace rloop {

// Result of an exhaustive identity sweep: ok unless some violation was found.
// Violations carry a minimal witness (first offender in sweep order); notes
// carry informational lines (e.g. "hypothesis not met").
struct CheckReport {
  std::string name;
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  void fail(std::string witness) {
    ok = false;
    violations.push_back(std::move(witness));
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

}  // namespace rloop
