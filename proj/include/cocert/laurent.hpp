#pragma once

// Multivariate Laurent polynomials over a Field.

#include <cctype>
#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocert/field.hpp"
#include "cocert/unipoly.hpp"

namespace cocert {

using Exponent = std::vector<int>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(std::vector<std::string> vars, Field f) : vars_(std::move(vars)), field_(f) {}

  static LaurentPoly constant(std::vector<std::string> vars, Field f, const Scalar& c) {
    LaurentPoly p(std::move(vars), f);
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }

  static LaurentPoly monomial(std::vector<std::string> vars, Field f, Exponent e, const Scalar& c) {
    LaurentPoly p(std::move(vars), f);
    require(e.size() == p.vars_.size(), ErrorKind::DimensionMismatch, "exponent length differs from variable count");
    p.add_term(std::move(e), c);
    return p;
  }

  static LaurentPoly variable(std::vector<std::string> vars, Field f, std::size_t i, int power = 1) {
    Exponent e(vars.size(), 0);
    e.at(i) = power;
    return monomial(std::move(vars), f, std::move(e), f.one());
  }

  static LaurentPoly from_unipoly(const UniPoly& u, const std::string& var) {
    LaurentPoly p({var}, u.field());
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) p.add_term({static_cast<int>(i)}, u.coeffs()[i]);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Adds c x^e, dropping the entry when it cancels.
  void add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return true;
    return false;
  }

  /// Componentwise minimum exponent over all terms (zeros if empty).
  Exponent min_exponent() const {
    Exponent m(nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.vars_, a.field_);
    Exponent e(a.nvars());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& a) {
    LaurentPoly r(a.vars_, a.field_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Integer power; negative powers only for monomials.
  LaurentPoly pow(int e) const {
    if (e < 0) {
      require(terms_.size() == 1, ErrorKind::InvalidArgument, "negative power of a non-monomial");
      const auto& [ex, c] = *terms_.begin();
      Exponent ne(ex.size());
      for (std::size_t i = 0; i < ex.size(); ++i) ne[i] = ex[i] * e;
      return monomial(vars_, field_, ne, c.pow(e));
    }
    LaurentPoly r = constant(vars_, field_, field_.one()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Multiply by x^shift.
  LaurentPoly shifted(const Exponent& shift) const {
    LaurentPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      Exponent ne = e;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  /// Formal partial derivative in variable i (Laurent rule x^k -> k x^(k-1)).
  LaurentPoly derivative(std::size_t i) const {
    LaurentPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent ne = e;
      ne[i] -= 1;
      r.add_term(ne, field_.from_int(e[i]) * c);
    }
    return r;
  }

  Scalar eval(const std::vector<Scalar>& point) const {
    require(point.size() == nvars(), ErrorKind::DimensionMismatch, "evaluation point has wrong length");
    Scalar s = field_.zero();
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t *= point[i].pow(e[i]);
      s += t;
    }
    return s;
  }

  /// Monomial substitution x^e -> x^(M e) (M is nvars x nvars, integer).
  LaurentPoly monomial_transform(const std::vector<std::vector<int>>& m) const {
    LaurentPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      Exponent ne(nvars(), 0);
      for (std::size_t i = 0; i < nvars(); ++i)
        for (std::size_t j = 0; j < nvars(); ++j) ne[i] += m[i][j] * e[j];
      r.add_term(ne, c);
    }
    return r;
  }

  /// Reinterpret in a larger variable list; all current vars must appear.
  LaurentPoly embed(const std::vector<std::string>& new_vars) const {
    std::vector<std::size_t> pos(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
      require(it != new_vars.end(), ErrorKind::VariableMismatch, "variable " + vars_[i] + " missing");
      pos[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    LaurentPoly r(new_vars, field_);
    for (const auto& [e, c] : terms_) {
      Exponent ne(new_vars.size(), 0);
      for (std::size_t i = 0; i < nvars(); ++i) ne[pos[i]] = e[i];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  /// Coefficients in the single variable (requires nvars == 1, no negatives).
  UniPoly to_unipoly() const {
    require(nvars() == 1 && !has_negative_exponent(), ErrorKind::InvalidArgument,
            "to_unipoly needs a univariate polynomial");
    std::vector<Scalar> c;
    for (const auto& [e, v] : terms_) {
      if (c.size() <= static_cast<std::size_t>(e[0])) c.resize(static_cast<std::size_t>(e[0]) + 1, field_.zero());
      c[static_cast<std::size_t>(e[0])] = v;
    }
    return UniPoly(field_, std::move(c));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      std::string term;
      if (mono.empty()) term = c.str();
      else if (c.is_one()) term = mono;
      else term = c.str() + "*" + mono;
      if (!s.empty()) s += " + ";
      s += term;
    }
    return s;
  }

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_) fail(ErrorKind::VariableMismatch, "polynomials live in different rings");
    if (field_ != o.field_) fail(ErrorKind::CharacteristicMismatch, "polynomials over different fields");
  }

  std::vector<std::string> vars_;
  Field field_;
  TermMap terms_;
};

namespace detail {

/// Recursive-descent parser for "+ - * / ^ ( )" expressions; the Policy
/// supplies constants, variables and the arithmetic of its value type.
/// Policy::divide / Policy::power return nullopt when the operation is
/// not defined for the operands.
template <class Policy>
class ExprParser {
 public:
  using Value = typename Policy::value_type;

  ExprParser(const std::string& src, const std::vector<std::string>& vars, Policy pol)
      : s_(src), vars_(vars), pol_(std::move(pol)) {}

  Value parse() {
    Value p = expr();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Parse, msg + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Value expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Value t = term();
    Value acc = neg ? pol_.sub(pol_.constant(BigInt(0)), t) : t;
    while (true) {
      if (eat('+')) acc = pol_.add(acc, term());
      else if (eat('-')) acc = pol_.sub(acc, term());
      else break;
    }
    return acc;
  }

  Value term() {
    Value acc = factor();
    while (true) {
      if (eat('*')) {
        acc = pol_.mul(acc, factor());
      } else if (eat('/')) {
        const std::size_t at = i_;
        auto q = pol_.divide(acc, factor());
        if (!q) {
          i_ = at;
          error("division by a non-invertible expression");
        }
        acc = std::move(*q);
      } else {
        break;
      }
    }
    return acc;
  }

  Value factor() {
    const std::size_t at = i_;
    Value base = atom();
    if (eat('^')) {
      const bool paren = eat('(');
      bool neg = eat('-');
      if (!neg) eat('+');
      const long e = integer();
      if (paren && !eat(')')) error("expected ')'");
      auto p = pol_.power(base, neg ? -e : e);
      if (!p) {
        i_ = at;
        error("negative power of a non-invertible expression");
      }
      base = std::move(*p);
    }
    return base;
  }

  long integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected integer");
    return std::stol(s_.substr(start, i_ - start));
  }

  Value atom() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Value e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return pol_.constant(BigInt(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name = s_.substr(start, i_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        i_ = start;
        error("unknown variable '" + name + "'");
      }
      return pol_.variable(static_cast<std::size_t>(it - vars_.begin()));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::vector<std::string> vars_;
  Policy pol_;
  std::size_t i_ = 0;
};

struct LaurentPolicy {
  using value_type = LaurentPoly;
  std::vector<std::string> vars;
  Field f;

  LaurentPoly constant(const BigInt& v) const { return LaurentPoly::constant(vars, f, f.from_bigint(v)); }
  LaurentPoly variable(std::size_t i) const { return LaurentPoly::variable(vars, f, i); }
  LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) const { return a + b; }
  LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) const { return a - b; }
  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const { return a * b; }
  std::optional<LaurentPoly> divide(const LaurentPoly& a, const LaurentPoly& b) const {
    if (b.size() != 1) return std::nullopt;
    return a * b.pow(-1);
  }
  std::optional<LaurentPoly> power(const LaurentPoly& a, long e) const {
    if (e < 0 && a.size() != 1) return std::nullopt;
    return a.pow(static_cast<int>(e));
  }
};

}  // namespace detail

/// Parses expressions like "x^2*y^-1 + 3*x - (x+y)^2 + 1/x".
inline LaurentPoly parse_laurent(const std::string& src, const std::vector<std::string>& vars, Field f) {
  return detail::ExprParser<detail::LaurentPolicy>(src, vars, detail::LaurentPolicy{vars, f}).parse();
}

}  // namespace cocert
