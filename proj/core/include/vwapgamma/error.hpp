#pragma once

#include <stdexcept>
#include <string>

namespace vwapgamma {

/// A parameter violates a documented invariant (non-positive volatility,
/// mismatched grids, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data cannot be used: malformed CSV, degenerate samples, too few
/// observations.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure has no solution for its inputs, e.g. an option
/// price outside the no-arbitrage bounds handed to the implied-vol solver.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw parameter_error(message);
}

}  // namespace detail
}  // namespace vwapgamma
