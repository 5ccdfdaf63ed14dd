#ifndef NOMINATION_ERRORS_HPP_
#define NOMINATION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nomination {

// Malformed or out-of-domain input: bad profile text, unknown identifiers,
// invalid schemes, or queries whose preconditions the input violates.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& message)
      : std::runtime_error(message) {}
};

// An enumeration would exceed its configured cap. Raised before any partial
// work is returned; callers never see truncated results.
class cap_exceeded_error : public std::runtime_error {
 public:
  explicit cap_exceeded_error(const std::string& message)
      : std::runtime_error(message) {}
};

// An internal consistency check failed. This always indicates a bug in the
// solver, never a property of the input.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& message)
      : std::logic_error(message) {}
};

}  // namespace nomination

#endif  // NOMINATION_ERRORS_HPP_
