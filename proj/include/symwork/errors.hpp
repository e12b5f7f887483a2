#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symwork {

// Argument outside the mathematical domain of an operation (k > n, beta < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A size limit was hit: oracle cap, particle-count underflow during cycling.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Input data that parsed but violates a physical invariant (normalization, sign).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Bad command-line usage, reported with exit code 2 by the CLI.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bookkeeping identity failed to hold (ledger first law, probability sum).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symwork
