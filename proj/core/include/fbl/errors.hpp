#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad exponent, band overflow, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Configuration text could not be turned into a valid RunConfig.
/// Carries every violation found, not just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// An iteration stopped contracting. Carries the history up to the failure.
class NumericDivergence : public Error {
 public:
  NumericDivergence(const std::string& what, std::vector<double> iterate_norms = {},
                    std::vector<double> rates = {})
      : Error(what), iterate_norms_(std::move(iterate_norms)), rates_(std::move(rates)) {}

  const std::vector<double>& iterate_norms() const noexcept { return iterate_norms_; }
  const std::vector<double>& rates() const noexcept { return rates_; }

 private:
  std::vector<double> iterate_norms_;
  std::vector<double> rates_;
};

}  // namespace fbl
