#pragma once

#include <stdexcept>
#include <string>

namespace fifogap {

// Input violates a documented precondition (bad sizes, parameters, files).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// exact_pack refuses instances larger than its configured limit.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fifogap
