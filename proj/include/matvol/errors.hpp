#ifndef MATVOL_ERRORS_HPP
#define MATVOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matvol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed data: a sequence, basis list or document that does not describe
// the object it claims to.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Well-formed arguments that violate an operation's hypotheses, e.g.
// relaxing a set that is not a circuit-hyperplane.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The lattice-point oracle refused an instance above its size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace matvol

#endif  // MATVOL_ERRORS_HPP
