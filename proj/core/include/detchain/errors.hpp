#ifndef DETCHAIN_ERRORS_HPP
#define DETCHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detchain {

// Malformed or out-of-contract input: parse failures, range violations,
// field mismatches, non-homogeneous generators, failed preconditions.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation exceeded its configured step budget. Never silent: the
// partial state is discarded and the caller decides how to report.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Dimension/height query on the unit ideal (empty scheme).
class EmptySchemeError : public std::runtime_error {
 public:
  explicit EmptySchemeError(const std::string& what)
      : std::runtime_error(what) {}
};

// Seeded sampling failed to produce a usable generic object after the
// bounded number of retries.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace detchain

#endif
