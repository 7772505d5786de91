#ifndef POWSGP_ERRORS_HPP
#define POWSGP_ERRORS_HPP

#include <stdexcept>

namespace powsgp {

// Bad input: malformed literals, ground mismatches, out-of-domain values.
// The CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A stated precondition of an operation does not hold. Reported separately
// from plain input errors so callers can tell a misuse from a bad literal.
class precondition_error : public input_error {
 public:
  using input_error::input_error;
};

// A configured cap was hit: enumeration domain, element count, tail
// threshold, or search timeout. The CLI maps this to exit code 3.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace powsgp

#endif  // POWSGP_ERRORS_HPP
