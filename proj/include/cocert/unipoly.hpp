#pragma once

// Dense univariate polynomials and their roots in the ground field.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cocert/field.hpp"

namespace cocert {

/// c[0] + c[1] t + ... ; trailing zeros are always trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field f) : field_(f) {}
  UniPoly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

  static UniPoly from_ints(Field f, const std::vector<std::int64_t>& coeffs) {
    std::vector<Scalar> c;
    for (auto v : coeffs) c.push_back(f.from_int(v));
    return UniPoly(f, std::move(c));
  }

  static UniPoly monomial(Field f, std::size_t deg, Scalar c) {
    std::vector<Scalar> v(deg + 1, f.zero());
    v[deg] = std::move(c);
    return UniPoly(f, std::move(v));
  }

  /// Sum of t^e for the listed exponents (coefficient 1 each, accumulated).
  static UniPoly sparse(Field f, const std::vector<std::size_t>& exps) {
    UniPoly p(f);
    for (auto e : exps) p = p + monomial(f, e, f.one());
    return p;
  }

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Scalar leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Scalar eval(const Scalar& x) const {
    Scalar r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(a.field_, std::move(r));
  }

  UniPoly operator-() const {
    std::vector<Scalar> r = c_;
    for (auto& x : r) x = -x;
    return UniPoly(field_, std::move(r));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.field_, std::move(r));
  }

  friend UniPoly operator*(const Scalar& s, const UniPoly& a) {
    std::vector<Scalar> r = a.c_;
    for (auto& x : r) x *= s;
    return UniPoly(a.field_, std::move(r));
  }

  UniPoly pow(std::size_t e) const {
    UniPoly r = UniPoly(field_, {field_.one()}), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(field_);
    std::vector<Scalar> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_.from_int(static_cast<std::int64_t>(i)) * c_[i];
    return UniPoly(field_, std::move(r));
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    require(!d.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Scalar> r = c_;
    if (c_.size() < d.c_.size()) return {UniPoly(field_), *this};
    std::vector<Scalar> q(c_.size() - d.c_.size() + 1, field_.zero());
    const Scalar inv = d.leading().inv();
    for (std::size_t k = q.size(); k-- > 0;) {
      const Scalar coef = r[k + d.c_.size() - 1] * inv;
      q[k] = coef;
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= coef * d.c_[j];
    }
    r.resize(d.c_.size() - 1);
    return {UniPoly(field_, std::move(q)), UniPoly(field_, std::move(r))};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return leading().inv() * (*this);
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      const bool unit = c_[i].is_one();
      if (i == 0) {
        s += c_[i].str();
      } else {
        if (!unit) s += c_[i].str() + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Roots in the ground field with multiplicities, plus a completeness flag
/// telling whether every root (counted with multiplicity) was found.
struct RootSet {
  std::vector<std::pair<Scalar, std::size_t>> roots;
  bool complete = false;
};

namespace detail {

inline std::size_t root_multiplicity(UniPoly f, const Scalar& r) {
  const Field& k = f.field();
  const UniPoly lin(k, {-r, k.one()});
  std::size_t m = 0;
  while (!f.is_zero()) {
    auto [q, rem] = f.divmod(lin);
    if (!rem.is_zero()) break;
    ++m;
    f = std::move(q);
  }
  return m;
}

inline std::vector<BigInt> divisors_of(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    require(d < 2000000, ErrorKind::CostGuardExceeded, "coefficient too large for rational root search");
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Roots of f lying in its ground field: exhaustive scan over GF(p), rational
/// root test over QQ. Throws CostGuardExceeded when p exceeds scan_limit.
inline RootSet ground_field_roots(const UniPoly& f, std::uint64_t scan_limit = 10'000'000) {
  require(!f.is_zero(), ErrorKind::InvalidArgument, "roots of the zero polynomial");
  const Field& k = f.field();
  RootSet out;
  std::size_t found = 0;
  if (k.characteristic() != 0) {
    const auto p = k.characteristic();
    require(p <= scan_limit, ErrorKind::CostGuardExceeded,
            "field scan over GF(" + std::to_string(p) + ") exceeds limit " + std::to_string(scan_limit));
    for (std::uint64_t v = 0; v < p; ++v) {
      const Scalar x = Scalar::gf_residue(p, v);
      if (f.eval(x).is_zero()) {
        const std::size_t m = detail::root_multiplicity(f, x);
        out.roots.emplace_back(x, m);
        found += m;
      }
    }
  } else {
    // clear denominators and strip the factor t^z
    BigInt lcm_den = 1;
    for (const auto& c : f.coeffs()) {
      const BigInt d = boost::multiprecision::denominator(c.to_rational());
      lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
    }
    std::vector<BigInt> ic;
    for (const auto& c : f.coeffs()) ic.push_back(boost::multiprecision::numerator(c.to_rational() * lcm_den));
    std::size_t z = 0;
    while (ic[z] == 0) ++z;
    if (z > 0) {
      out.roots.emplace_back(k.zero(), z);
      found += z;
    }
    if (z + 1 < ic.size()) {
      const auto num_divs = detail::divisors_of(ic[z]);
      const auto den_divs = detail::divisors_of(ic.back());
      std::map<Rational, bool> tried;
      for (const auto& a : num_divs)
        for (const auto& b : den_divs)
          for (int sign : {1, -1}) {
            Rational cand(BigInt(a * sign), b);
            if (tried.count(cand)) continue;
            tried[cand] = true;
            const Scalar x = k.from_rational(cand);
            if (f.eval(x).is_zero()) {
              const std::size_t m = detail::root_multiplicity(f, x);
              out.roots.emplace_back(x, m);
              found += m;
            }
          }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.complete = found == static_cast<std::size_t>(f.degree());
  return out;
}

}  // namespace cocert
