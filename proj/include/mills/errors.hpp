#pragma once

#include <stdexcept>
#include <string>

namespace mills {

// Point outside the closed right half-plane, non-finite input, or a violated precondition.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested (unscaled) value does not fit in a double; use the scaled or log form instead.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A numerical procedure could not certify its own result.
class accuracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mills
