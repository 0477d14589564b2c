#pragma once

#include <stdexcept>
#include <string>

namespace semirelax {

/// A structured-text input could not be parsed. Carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Parameters violate the analytic hypotheses of a requested check or regime.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The discrete solution became non-finite or broke a monotonicity guarantee.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(long step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semirelax
