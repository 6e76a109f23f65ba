#pragma once

#include <stdexcept>
#include <string>

namespace covlab {

/// Malformed or out-of-contract input (bad symbol, violated precondition).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A system description that is not a covering map of an SFT.
class InvalidSystemError : public InputError {
 public:
  using InputError::InputError;
};

/// The requested witness cylinder fails the equalizer or length precondition.
class WitnessPreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A truncated basis or search grew past its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A commutation probe landed between the "holds" and "fails" thresholds;
/// the truncation is too coarse to decide.
class AmbiguousTruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace covlab
