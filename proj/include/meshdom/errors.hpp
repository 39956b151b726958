#pragma once

#include <stdexcept>

namespace meshdom {

// Input that violates a constructor or operation precondition.
struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structurally valid input outside what this build can compute (size caps).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace meshdom
