// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qpsim {

// Circuit/observable text that cannot be parsed. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(const std::string& message) : std::runtime_error(message), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Requested work exceeds a configured resource bound (branch budget, dense-oracle cap).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpsim
