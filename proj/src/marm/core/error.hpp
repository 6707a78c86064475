#pragma once

#include <stdexcept>
#include <string>

namespace marm {

// A label carried more than one proposition with an outgoing transition
// from the current state. Cannot happen for per-agent traces (at most one
// proposition per step); guarded for global labels.
class AmbiguousLabel : public std::runtime_error {
 public:
  explicit AmbiguousLabel(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (RM files, maps, trace files). Carries a 1-based
// line number where available.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Induction ran out of states or wall-clock budget.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

class TimeoutExceeded : public std::runtime_error {
 public:
  explicit TimeoutExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The same trace was presented as both a goal and an incomplete example.
class ContradictoryExamples : public std::runtime_error {
 public:
  explicit ContradictoryExamples(const std::string& what)
      : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace marm
