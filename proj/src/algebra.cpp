#include "arithcurv/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace arithcurv {

namespace {

bool all_zero(const std::vector<RatFunc>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

bool scalar_only(const std::vector<RatFunc>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

void check_same(const AlgElem& x, const AlgElem& y) {
  if (!x.algebra() || x.algebra() != y.algebra()) throw std::invalid_argument("algebra mismatch");
}

}  // namespace

AlgElem::AlgElem(AlgebraPtr algebra, std::vector<RatFunc> coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_ || coeffs_.size() != algebra_->dimension())
    throw std::invalid_argument("coefficient vector does not match algebra dimension");
}

bool AlgElem::is_zero() const { return all_zero(coeffs_); }

bool AlgElem::is_scalar() const { return scalar_only(coeffs_); }

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlgElem operator+(const AlgElem& x, const AlgElem& y) {
  check_same(x, y);
  AlgElem r = x;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    if (!y.coeffs_[i].is_zero()) r.coeffs_[i] += y.coeffs_[i];
  return r;
}

AlgElem operator-(const AlgElem& x, const AlgElem& y) {
  check_same(x, y);
  AlgElem r = x;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    if (!y.coeffs_[i].is_zero()) r.coeffs_[i] -= y.coeffs_[i];
  return r;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
  check_same(x, y);
  return AlgElem(x.algebra_, x.algebra_->multiply(x.coeffs_, y.coeffs_));
}

AlgElem AlgElem::scaled(const Rational& c) const {
  AlgElem r = *this;
  for (auto& e : r.coeffs_) e = e.scaled(c);
  return r;
}

AlgElem AlgElem::times(const RatFunc& e) const {
  AlgElem r = *this;
  for (auto& c : r.coeffs_)
    if (!c.is_zero()) c *= e;
  return r;
}

AlgElem AlgElem::pow(unsigned k) const {
  AlgElem result = algebra_->one();
  AlgElem base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const AlgElem& x, const AlgElem& y) {
  if (x.algebra_ != y.algebra_) return false;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    if (!(x.coeffs_[i] == y.coeffs_[i])) return false;
  return true;
}

AlgebraPtr QuotAlgebra::base() {
  static const AlgebraPtr e = [] { return AlgebraPtr(new QuotAlgebra()); }();
  return e;
}

AlgebraPtr QuotAlgebra::adjoin(std::string name, const std::vector<AlgElem>& lower) const {
  if (lower.empty()) throw std::invalid_argument("relation must have positive degree");
  auto child = std::shared_ptr<QuotAlgebra>(new QuotAlgebra());
  child->parent_ = shared_from_this();
  child->names_ = names_;
  child->names_.push_back(std::move(name));
  child->degrees_ = degrees_;
  child->degrees_.push_back(static_cast<unsigned>(lower.size()));
  child->dimension_ = dimension_ * lower.size();
  for (const auto& c : lower) {
    if (c.algebra().get() != this) throw std::invalid_argument("relation coefficient lives in another algebra");
    child->lower_.push_back(c.coeffs());
  }
  return child;
}

std::vector<AlgElem> QuotAlgebra::relation(std::size_t i) const {
  if (i >= names_.size()) throw std::out_of_range("no such generator");
  if (i + 1 < names_.size()) {
    std::vector<AlgElem> out;
    for (const auto& c : parent_->relation(i)) out.push_back(embed(c));
    return out;
  }
  std::vector<AlgElem> out;
  for (const auto& c : lower_) out.push_back(embed(AlgElem(parent_, c)));
  return out;
}

AlgebraPtr QuotAlgebra::prefix(std::size_t k) const {
  if (k > names_.size()) throw std::out_of_range("prefix longer than tower");
  AlgebraPtr a = shared_from_this();
  while (a->num_generators() > k) a = a->parent_;
  return a;
}

AlgElem QuotAlgebra::zero() const { return AlgElem(shared_from_this(), std::vector<RatFunc>(dimension_)); }

AlgElem QuotAlgebra::one() const { return scalar(RatFunc(1)); }

AlgElem QuotAlgebra::scalar(const RatFunc& e) const {
  std::vector<RatFunc> v(dimension_);
  v[0] = e;
  return AlgElem(shared_from_this(), std::move(v));
}

AlgElem QuotAlgebra::basis(std::size_t index) const {
  std::vector<RatFunc> v(dimension_);
  v.at(index) = RatFunc(1);
  return AlgElem(shared_from_this(), std::move(v));
}

AlgElem QuotAlgebra::generator(std::size_t i) const {
  if (i >= names_.size()) throw std::out_of_range("no such generator");
  std::size_t stride = 1;
  for (std::size_t k = 0; k < i; ++k) stride *= degrees_[k];
  if (degrees_[i] == 1) {
    // t_i is forced to equal -lower_0.
    return -embed(prefix(i + 1)->relation(i)[0]);
  }
  return basis(stride);
}

std::vector<unsigned> QuotAlgebra::basis_exponents(std::size_t index) const {
  std::vector<unsigned> e(degrees_.size());
  for (std::size_t k = 0; k < degrees_.size(); ++k) {
    e[k] = static_cast<unsigned>(index % degrees_[k]);
    index /= degrees_[k];
  }
  return e;
}

AlgElem QuotAlgebra::embed(const AlgElem& x) const {
  if (x.algebra().get() == this) return x;
  // The source must be an ancestor: a prefix of this tower.
  AlgebraPtr a = parent_;
  while (a && a != x.algebra()) a = a->parent_;
  if (!a) throw std::invalid_argument("element does not belong to a prefix algebra");
  std::vector<RatFunc> v = x.coeffs();
  v.resize(dimension_);
  return AlgElem(shared_from_this(), std::move(v));
}

std::vector<RatFunc> QuotAlgebra::multiply(const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) const {
  if (!parent_) return {x[0] * y[0]};
  if (scalar_only(x)) {
    std::vector<RatFunc> r(dimension_);
    if (x[0].is_zero()) return r;
    for (std::size_t i = 0; i < dimension_; ++i)
      if (!y[i].is_zero()) r[i] = x[0] * y[i];
    return r;
  }
  if (scalar_only(y)) return multiply(y, x);

  const std::size_t m = parent_->dimension();
  const std::size_t d = degrees_.back();
  auto block = [m](const std::vector<RatFunc>& v, std::size_t i) {
    return std::vector<RatFunc>(v.begin() + static_cast<std::ptrdiff_t>(i * m),
                                v.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
  };
  auto add_into = [](std::vector<RatFunc>& acc, const std::vector<RatFunc>& v, int sign) {
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (v[k].is_zero()) continue;
      if (sign > 0) acc[k] += v[k]; else acc[k] -= v[k];
    }
  };

  std::vector<std::vector<RatFunc>> xb(d), yb(d);
  for (std::size_t i = 0; i < d; ++i) {
    xb[i] = block(x, i);
    yb[i] = block(y, i);
  }
  std::vector<std::vector<RatFunc>> c(2 * d - 1, std::vector<RatFunc>(m));
  for (std::size_t i = 0; i < d; ++i) {
    if (all_zero(xb[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (all_zero(yb[j])) continue;
      add_into(c[i + j], parent_->multiply(xb[i], yb[j]), +1);
    }
  }
  // t^d = -sum_j lower_j t^j, applied from the top degree down.
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    if (all_zero(c[k])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (all_zero(lower_[j])) continue;
      add_into(c[k - d + j], parent_->multiply(c[k], lower_[j]), -1);
    }
  }
  std::vector<RatFunc> out;
  out.reserve(dimension_);
  for (std::size_t i = 0; i < d; ++i) out.insert(out.end(), c[i].begin(), c[i].end());
  return out;
}

const std::vector<RatFunc>& QuotAlgebra::basis_traces() const {
  std::call_once(traces_once_, [this] {
    std::vector<RatFunc> tr(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) {
      std::vector<RatFunc> ei(dimension_);
      ei[i] = RatFunc(1);
      RatFunc acc;
      for (std::size_t j = 0; j < dimension_; ++j) {
        std::vector<RatFunc> ej(dimension_);
        ej[j] = RatFunc(1);
        auto prod = multiply(ei, ej);
        if (!prod[j].is_zero()) acc += prod[j];
      }
      tr[i] = acc;
    }
    traces_ = std::move(tr);
  });
  return traces_;
}

std::string QuotAlgebra::describe() const {
  std::ostringstream out;
  out << "E";
  if (!names_.empty()) {
    out << "[";
    for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
    out << "]";
  }
  out << " (dim " << dimension_ << ")";
  return out.str();
}

AlgElem alg_mul(const AlgElem& x, const AlgElem& y) { return x * y; }

RatMatrix mult_matrix(const AlgElem& x) {
  const auto& alg = *x.algebra();
  const std::size_t d = alg.dimension();
  RatMatrix m(d);
  for (std::size_t j = 0; j < d; ++j) {
    AlgElem col = x * alg.basis(j);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

RatFunc trace_pi(const AlgElem& x) {
  const auto& tr = x.algebra()->basis_traces();
  RatFunc acc;
  for (std::size_t i = 0; i < tr.size(); ++i)
    if (!x[i].is_zero() && !tr[i].is_zero()) acc += x[i] * tr[i];
  return acc;
}

AlgElem alg_inverse(const AlgElem& x) {
  if (x.is_zero()) throw NotInvertible("inverse of zero in a finite E-algebra");
  const auto& alg = x.algebra();
  if (x.is_scalar()) return alg->scalar(x[0].inverse());
  std::vector<RatFunc> rhs(alg->dimension());
  rhs[0] = RatFunc(1);
  try {
    return AlgElem(alg, solve(mult_matrix(x), std::move(rhs)));
  } catch (const NotInvertible&) {
    throw NotInvertible("zero divisor in " + alg->describe());
  }
}

TowerExtension extend_by(const AlgebraPtr& base, const AlgebraPtr& other,
                         const std::function<AlgElem(const RatFunc&)>& coeff_map, const std::string& suffix) {
  const std::size_t k = other->num_generators();
  AlgebraPtr cur = base;
  const std::size_t offset = base->num_generators();

  // Maps an element of other's prefix with `gens` generators into `target`.
  auto push_into = [&coeff_map, offset](const AlgebraPtr& target, const AlgElem& x) {
    const auto& src = *x.algebra();
    AlgElem acc = target->zero();
    for (std::size_t idx = 0; idx < src.dimension(); ++idx) {
      if (x[idx].is_zero()) continue;
      AlgElem term = target->embed(coeff_map(x[idx]));
      auto e = src.basis_exponents(idx);
      for (std::size_t g = 0; g < e.size(); ++g)
        if (e[g] > 0) term = term * target->generator(offset + g).pow(e[g]);
      acc = acc + term;
    }
    return acc;
  };

  for (std::size_t g = 0; g < k; ++g) {
    AlgebraPtr src_prefix = other->prefix(g + 1);
    std::vector<AlgElem> lower;
    for (const auto& c : src_prefix->relation(g)) {
      // Relation coefficients involve only the first g generators.
      AlgElem restricted(other->prefix(g), std::vector<RatFunc>(c.coeffs().begin(),
                                                                c.coeffs().begin() + static_cast<std::ptrdiff_t>(other->prefix(g)->dimension())));
      lower.push_back(push_into(cur, restricted));
    }
    cur = cur->adjoin(other->generator_name(g) + suffix, lower);
  }
  AlgebraPtr result = cur;
  return TowerExtension{result, [result, push_into](const AlgElem& x) { return push_into(result, x); }};
}

TowerExtension tensor_product(const AlgebraPtr& f1, const AlgebraPtr& f2, const std::string& suffix) {
  return extend_by(f1, f2, [f1](const RatFunc& e) { return f1->scalar(e); }, suffix);
}

}  // namespace arithcurv
