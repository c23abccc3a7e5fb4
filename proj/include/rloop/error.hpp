#pragma once

#include <stdexcept>
#include <string>

namespace rloop {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
struct input_error : error {
  using error::error;
};

// A configured size/search cap would be exceeded.
struct cap_error : error {
  using error::error;
};

// An identity that holds for every valid input failed to verify.
// Indicates a bug in this library, never bad input.
struct internal_error : error {
  using error::error;
};

}  // namespace rloop
