#ifndef ARITHCURV_ALGEBRA_HPP
#define ARITHCURV_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "arithcurv/matrix.hpp"
#include "arithcurv/ratfunc.hpp"

namespace arithcurv {

class QuotAlgebra;
using AlgebraPtr = std::shared_ptr<const QuotAlgebra>;

/// Element of a finite E-algebra: coefficients over the algebra's
/// monomial basis.
class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(AlgebraPtr algebra, std::vector<RatFunc> coeffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const RatFunc& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  /// True if the element lies in E (only the coefficient of 1 is nonzero).
  bool is_scalar() const;

  AlgElem operator-() const;
  friend AlgElem operator+(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator-(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y);
  AlgElem scaled(const Rational& c) const;
  AlgElem times(const RatFunc& e) const;
  AlgElem pow(unsigned k) const;

  /// Coefficient-wise exact equality in E.
  friend bool operator==(const AlgElem& x, const AlgElem& y);

 private:
  AlgebraPtr algebra_;
  std::vector<RatFunc> coeffs_;
};

/// E[t_1, ..., t_k] / (m_1, ..., m_k) where m_i is monic in t_i of degree
/// d_i with coefficients in E[t_1..t_{i-1}]/(m_1..m_{i-1}).
///
/// Built as a tower: each algebra knows its parent (one generator fewer).
/// The flat basis index of t_1^e_1 ... t_k^e_k is e_1 + d_1 (e_2 + d_2 (...)),
/// so an element of the parent is a prefix of its image here.
class QuotAlgebra : public std::enable_shared_from_this<QuotAlgebra> {
 public:
  /// E itself (dimension 1, no generators).
  static AlgebraPtr base();

  /// Adjoins a generator t with relation t^d + sum_j lower[j] t^j = 0,
  /// d = lower.size(); each lower[j] must belong to this algebra.
  AlgebraPtr adjoin(std::string name, const std::vector<AlgElem>& lower) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t num_generators() const { return names_.size(); }
  const std::string& generator_name(std::size_t i) const { return names_.at(i); }
  unsigned generator_degree(std::size_t i) const { return degrees_.at(i); }
  /// Relation coefficients of generator i, as elements of this algebra.
  std::vector<AlgElem> relation(std::size_t i) const;
  /// The ancestor algebra with the first k generators.
  AlgebraPtr prefix(std::size_t k) const;

  AlgElem zero() const;
  AlgElem one() const;
  AlgElem scalar(const RatFunc& e) const;
  AlgElem generator(std::size_t i) const;
  /// Basis element with the given flat index.
  AlgElem basis(std::size_t index) const;
  /// Exponent vector (e_1..e_k) of a flat basis index.
  std::vector<unsigned> basis_exponents(std::size_t index) const;
  /// Image of an element of an ancestor (prefix) algebra.
  AlgElem embed(const AlgElem& x) const;

  /// tr_pi(e_i) for every basis element, computed once.
  const std::vector<RatFunc>& basis_traces() const;

  /// Product of raw coefficient vectors, reduced by the relations.
  std::vector<RatFunc> multiply(const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) const;

  std::string describe() const;

 private:
  QuotAlgebra() = default;

  AlgebraPtr parent_;
  std::size_t dimension_ = 1;
  std::vector<std::string> names_;
  std::vector<unsigned> degrees_;
  // Lower coefficients of the last relation, as parent coefficient vectors.
  std::vector<std::vector<RatFunc>> lower_;

  mutable std::once_flag traces_once_;
  mutable std::vector<RatFunc> traces_;
};

AlgElem alg_mul(const AlgElem& x, const AlgElem& y);
/// Matrix of multiplication by x in the monomial basis (column j = x * e_j).
RatMatrix mult_matrix(const AlgElem& x);
/// Trace of the structural inclusion E -> F.
RatFunc trace_pi(const AlgElem& x);
/// Inverse by solving the linear system mult_matrix(x) * y = 1; throws
/// NotInvertible when x is a zero divisor.
AlgElem alg_inverse(const AlgElem& x);

/// Appends the generators of `other` to `base`, mapping each coefficient
/// e in E of other's relations through `coeff_map` (a ring map E -> base).
/// Returns the extended algebra and the induced ring map other -> result.
struct TowerExtension {
  AlgebraPtr algebra;
  std::function<AlgElem(const AlgElem&)> push;
};
TowerExtension extend_by(const AlgebraPtr& base, const AlgebraPtr& other,
                         const std::function<AlgElem(const RatFunc&)>& coeff_map, const std::string& suffix = "");

/// F1 (x)_E F2.
TowerExtension tensor_product(const AlgebraPtr& f1, const AlgebraPtr& f2, const std::string& suffix = "");

}  // namespace arithcurv

#endif  // ARITHCURV_ALGEBRA_HPP
