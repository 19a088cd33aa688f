#pragma once

#include <stdexcept>
#include <string>

namespace idg {

// Well-formed request that cannot be served (unsupported parameters, size
// limits, inapplicable formula). CLI maps this to exit code 3.
struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive work estimate exceeds the configured budget.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace idg
