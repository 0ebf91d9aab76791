#include "arithcurv/correspondence.hpp"

#include "arithcurv/core.hpp"

namespace arithcurv {

namespace {

std::vector<AlgElem> entry_images(const Correspondence& g) {
  const std::size_t n = g.phi_images.size();
  std::vector<AlgElem> images;
  images.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images.push_back(g.phi_images(i, j));
  return images;
}

}  // namespace

AlgElem phi_apply(const Correspondence& g, const RatFunc& f) {
  const auto images = entry_images(g);
  const std::span<const AlgElem> view(images);
  const AlgElem one = g.algebra->one();
  AlgElem num = evaluate<AlgElem>(f.num(), view, one);
  if (f.is_polynomial() || num.is_zero()) return num;

  AlgElem den = evaluate<AlgElem>(MPoly::monomial(f.den_monomial()), view, one);
  for (const auto& fac : f.den_factors()) den = den * evaluate<AlgElem>(fac.poly, view, one).pow(fac.exp);
  if (den.is_zero()) throw NotInvertible("denominator maps to zero under phi_" + g.label);
  if (den.is_scalar()) return num.times(den[0].inverse());
  return num * alg_inverse(den);
}

RatFunc gamma_star(const Correspondence& g, const RatFunc& f) { return trace_pi(phi_apply(g, f)); }

Correspondence compose_correspondences(const Correspondence& g1, const Correspondence& g2) {
  auto ext = extend_by(g2.algebra, g1.algebra, [&g2](const RatFunc& e) { return phi_apply(g2, e); }, "_" + g1.label);
  Correspondence out;
  out.algebra = ext.algebra;
  out.phi_images = g1.phi_images.map([&ext](const AlgElem& x) { return ext.push(x); });
  out.label = g1.label + "*" + g2.label;
  out.prime = g1.prime * g2.prime;
  return out;
}

nlohmann::json to_json(const AlgElem& x, const VarTable& vars) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : x.coeffs()) arr.push_back(to_string(c, vars));
  return arr;
}

nlohmann::json algebra_to_json(const QuotAlgebra& alg, const VarTable& vars) {
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i = 0; i < alg.num_generators(); ++i) {
    const std::size_t m = alg.prefix(i)->dimension();
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& c : alg.relation(i)) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (std::size_t k = 0; k < m; ++k) coeffs.push_back(to_string(c[k], vars));
      rel.push_back(coeffs);
    }
    gens.push_back({{"name", alg.generator_name(i)}, {"degree", alg.generator_degree(i)}, {"relation", rel}});
  }
  return {{"dimension", alg.dimension()}, {"generators", gens}};
}

nlohmann::json to_json(const Correspondence& g, const VarTable& vars) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < g.phi_images.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < g.phi_images.size(); ++j) row.push_back(to_json(g.phi_images(i, j), vars));
    rows.push_back(row);
  }
  return {{"label", g.label}, {"left_degree", g.left_degree()}, {"algebra", algebra_to_json(*g.algebra, vars)},
          {"phi_images", rows}};
}

}  // namespace arithcurv
