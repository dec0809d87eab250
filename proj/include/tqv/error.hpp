#ifndef TQV_ERROR_HPP_
#define TQV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tqv {

/// Input that violates an operation's precondition (malformed file, index
/// mismatch, non-morphism passed to a regularity check, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A product of generators that leaves the degree-<=2 fragment.
class FragmentError : public InputError {
 public:
  FragmentError() : InputError("outside deg-≤2 fragment") {}
};

/// Broken internal invariant. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tqv

#endif  // TQV_ERROR_HPP_
