#pragma once

#include <stdexcept>

namespace geim {

// Series or iteration budget exhausted before reaching tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments are valid reals but outside the regimes this library evaluates
// (e.g. hypergeometric arguments near 1 without the logarithmic structure).
class UnsupportedRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace geim
