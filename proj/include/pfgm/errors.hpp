#pragma once

#include <stdexcept>
#include <string>

namespace pfgm {

// Malformed input or a violated precondition. The CLI maps this to exit 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation the library declines to run. The CLI maps this to exit 2.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The enumeration or Taylor work budget would be exceeded.
class CapExceeded : public Refusal {
 public:
  using Refusal::Refusal;
};

// A certified error bound was demanded but the instance lies outside the
// zero-free region (beta <= 1).
class NoCertificate : public Refusal {
 public:
  using Refusal::Refusal;
};

}  // namespace pfgm
