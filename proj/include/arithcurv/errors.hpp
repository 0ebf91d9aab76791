#ifndef ARITHCURV_ERRORS_HPP
#define ARITHCURV_ERRORS_HPP

#include <stdexcept>

namespace arithcurv {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element that must be a unit (in E, in a finite E-algebra, or mod p)
/// turned out not to be one.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace arithcurv

#endif  // ARITHCURV_ERRORS_HPP
