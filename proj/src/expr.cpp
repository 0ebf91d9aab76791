#include "arithcurv/expr.hpp"

#include <cctype>
#include <sstream>

namespace arithcurv {

VarTable::VarTable(std::size_t n) : n_(n) {
  if (n == 0 || n * n + 4 > kMaxVars) throw std::invalid_argument("unsupported matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (n == 2) {
        names_.push_back(std::string(1, static_cast<char>('a' + i * 2 + j)));
      } else {
        names_.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
      }
      entries_.push_back(i * n + j);
    }
  }
  for (const char* aux : {"s", "t", "tp", "tq"}) names_.emplace_back(aux);
}

std::optional<std::size_t> VarTable::lookup(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  if (name.size() == 3 && name[0] == 'x' && std::isdigit(name[1]) && std::isdigit(name[2])) {
    std::size_t i = static_cast<std::size_t>(name[1] - '1');
    std::size_t j = static_cast<std::size_t>(name[2] - '1');
    if (i < n_ && j < n_) return entry(i, j);
  }
  return std::nullopt;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarTable& vars) : text_(text), vars_(vars) {}

  RatFunc ratfunc() {
    MPoly num = poly();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      MPoly den = poly();
      finish();
      if (den.is_zero()) throw ParseError("zero denominator");
      return RatFunc::fraction(num, den);
    }
    finish();
    return RatFunc(num);
  }

  MPoly poly_only() {
    MPoly p = poly();
    finish();
    return p;
  }

 private:
  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  MPoly poly() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      MPoly p = poly();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    MPoly acc;
    int sign = 1;
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      MPoly t = term();
      if (sign < 0) acc -= t; else acc += t;
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    return acc;
  }

  MPoly term() {
    Rational coeff = 1;
    Monomial mono;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Rational(natural());
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto var = vars_.lookup(name);
        if (!var) {
          pos_ = start;
          fail("unknown variable '" + std::string(name) + "'");
        }
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          Integer k = natural();
          if (!k.fits_uint_p()) fail("exponent too large");
          e = static_cast<unsigned>(k.get_ui());
        }
        mono = mono * Monomial::variable(*var, e);
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return MPoly::monomial(mono, coeff);
  }

  Integer natural() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const VarTable& vars_;
  std::size_t pos_ = 0;
};

// Prints a polynomial whose coefficients are all integers.
std::string print_integral(const MPoly& p, const VarTable& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Integer c = t.coeff.get_num();
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.mono.is_one()) {
      out << c.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < vars.size(); ++v) {
      unsigned e = t.mono[v];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << vars.name(v);
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const VarTable& vars) { return Parser(text, vars).ratfunc(); }

MPoly parse_poly(std::string_view text, const VarTable& vars) { return Parser(text, vars).poly_only(); }

std::string to_string(const MPoly& p, const VarTable& vars) {
  Integer l = p.denominator_lcm();
  if (l == 1) return print_integral(p, vars);
  return print_integral(p.scaled(Rational(l)), vars) + " / " + l.get_str();
}

std::string to_string(const RatFunc& f, const VarTable& vars) {
  if (f.is_polynomial()) return to_string(f.num(), vars);
  MPoly num = f.num();
  MPoly den = f.den();
  // Clear coefficient denominators on both sides, then remove the common integer content.
  Integer l;
  mpz_lcm(l.get_mpz_t(), num.denominator_lcm().get_mpz_t(), den.denominator_lcm().get_mpz_t());
  num = num.scaled(Rational(l));
  den = den.scaled(Rational(l));
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.content().get_num_mpz_t(), den.content().get_num_mpz_t());
  if (sgn(den.leading().coeff) < 0) g = -g;
  if (g != 1) {
    num = num.scaled(Rational(1) / Rational(g));
    den = den.scaled(Rational(1) / Rational(g));
  }
  if (den.is_constant() && den.constant_value() == 1) return print_integral(num, vars);
  return print_integral(num, vars) + " / " + print_integral(den, vars);
}

}  // namespace arithcurv
