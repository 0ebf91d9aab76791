#ifndef ARITHCURV_EXPR_HPP
#define ARITHCURV_EXPR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithcurv/ratfunc.hpp"

namespace arithcurv {

/// Names of the indeterminates of a GL_n session, in monomial order:
/// the n^2 matrix entries row by row, then the auxiliaries s, t, tp, tq.
/// For n = 2 the entries print as a, b, c, d; x11..x22 parse as aliases.
class VarTable {
 public:
  explicit VarTable(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return names_.size(); }
  /// Index of matrix entry (i, j), zero-based.
  std::size_t entry(std::size_t i, std::size_t j) const { return i * n_ + j; }
  std::size_t s() const { return n_ * n_; }
  std::size_t t() const { return n_ * n_ + 1; }
  std::size_t tp() const { return n_ * n_ + 2; }
  std::size_t tq() const { return n_ * n_ + 3; }
  /// Indices of all matrix entries.
  const std::vector<std::size_t>& entries() const { return entries_; }

  const std::string& name(std::size_t var) const { return names_.at(var); }
  std::optional<std::size_t> lookup(std::string_view name) const;

 private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<std::size_t> entries_;
};

/// Expression grammar:
///   ratfunc := poly | poly "/" poly
///   poly    := term (("+"|"-") term)*
///   term    := factor ("*" factor)*      factor := nat | var ("^" nat)?
/// A leading sign is allowed; each poly may be wrapped in parentheses.
RatFunc parse_ratfunc(std::string_view text, const VarTable& vars);
MPoly parse_poly(std::string_view text, const VarTable& vars);

/// Canonical text: integer coefficients, graded-lex term order.
std::string to_string(const MPoly& p, const VarTable& vars);
/// "num" or "num / den", both with integer coefficients and den having a
/// positive leading coefficient.
std::string to_string(const RatFunc& f, const VarTable& vars);

}  // namespace arithcurv

#endif  // ARITHCURV_EXPR_HPP
