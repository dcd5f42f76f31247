#pragma once

#include <string>
#include <vector>

namespace cra {

// One failed check with enough context to reproduce it by hand.
struct Failure {
  std::string condition;  // e.g. "identity", "converse", "composition-subset"
  std::string where;      // offending index, pair, triple or atom, e.g. "(0,1,2)"
  std::string witness;    // human-readable counterexample
};

// Pass/fail verdict of a semantic check. Checks never throw on mathematical
// failure; they accumulate failures (and informational notes) here.
struct Report {
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string condition, std::string where, std::string witness);
  void note(std::string text);
  void merge(const Report& other);

  // Stable multi-line rendering: one "failure ..." line per entry, then notes.
  std::string to_string() const;
};

}  // namespace cra
