#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

// Input outside what an operation accepts (bad sizes, negative couplings, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is valid but the operation only covers a narrower case.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class StabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace zigzag
