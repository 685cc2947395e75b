#pragma once

#include <stdexcept>
#include <string>

namespace cfcolor {

// Malformed caller-supplied data or a violated precondition.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A degenerate configuration the exact predicates refuse to decide
// (shared endpoints, collinear overlaps, tangencies).
struct GeneralPositionError : InputError {
  using InputError::InputError;
};

// A property the algorithms guarantee by construction failed to hold at
// runtime. Seeing this means a bug, not bad input.
struct InternalInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// A configured search or resample budget ran out.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cfcolor
