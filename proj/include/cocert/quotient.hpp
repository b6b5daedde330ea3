#pragma once

// Finite-dimensional quotients of Laurent polynomial rings.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocert/groebner.hpp"

namespace cocert {

class Ideal {
 public:
  Ideal(std::vector<std::string> vars, Field f, std::vector<LaurentPoly> gens = {})
      : vars_(std::move(vars)), field_(f) {
    for (auto& g : gens) add(std::move(g));
  }

  static Ideal parse(const std::vector<std::string>& vars, Field f, const std::vector<std::string>& gens) {
    Ideal I(vars, f);
    for (const auto& g : gens) I.add(parse_laurent(g, vars, f));
    return I;
  }

  void add(LaurentPoly g) {
    require(g.vars() == vars_, ErrorKind::VariableMismatch, "generator lives in another ring");
    require(g.field() == field_, ErrorKind::CharacteristicMismatch, "generator over another field");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Field& field() const { return field_; }
  const std::vector<LaurentPoly>& generators() const { return gens_; }

 private:
  std::vector<std::string> vars_;
  Field field_;
  std::vector<LaurentPoly> gens_;
};

/// A Groebner basis in the polynomial ring on `vars` (which may include
/// auxiliary inverse variables named "<v>_inv").
struct PolyBasis {
  std::vector<std::string> vars;
  Field field;
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::vector<SortedPoly> polys;

  std::vector<LaurentPoly> to_laurent() const {
    std::vector<LaurentPoly> out;
    for (const auto& p : polys) out.push_back(from_sorted(p, vars, field));
    return out;
  }
  bool is_unit_ideal() const { return polys.size() == 1 && polys[0].size() == 1 && polys[0][0].exp == Exponent(vars.size(), 0); }
};

namespace detail {

/// Rewrites a Laurent polynomial in the ring with aux variables; negative
/// exponents of variable i go to its aux variable aux[i] (must exist).
inline SortedPoly polynomialize(const LaurentPoly& f, const std::vector<int>& aux, std::size_t total,
                                MonomialOrder order) {
  SortedPoly p;
  for (const auto& [e, c] : f.terms()) {
    Exponent ne(total, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= 0) {
        ne[i] = e[i];
      } else {
        require(aux[i] >= 0, ErrorKind::InvalidArgument, "negative exponent without inverse variable");
        ne[static_cast<std::size_t>(aux[i])] = -e[i];
      }
    }
    p.push_back({std::move(ne), c});
  }
  std::sort(p.begin(), p.end(),
            [order](const Term& a, const Term& b) { return compare_monomials(a.exp, b.exp, order) > 0; });
  return p;
}

}  // namespace detail

/// Groebner basis of I. Variables carrying negative exponents in some
/// generator get an auxiliary inverse variable with relation v*v_inv - 1.
inline PolyBasis groebner_basis(const Ideal& I, MonomialOrder order = MonomialOrder::DegRevLex) {
  const std::size_t n = I.vars().size();
  std::vector<int> aux(n, -1);
  std::vector<std::string> vars = I.vars();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& g : I.generators())
      if (g.min_exponent()[i] < 0) {
        aux[i] = static_cast<int>(vars.size());
        vars.push_back(I.vars()[i] + "_inv");
        break;
      }
  std::vector<SortedPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(detail::polynomialize(g, aux, vars.size(), order));
  for (std::size_t i = 0; i < n; ++i) {
    if (aux[i] < 0) continue;
    Exponent e(vars.size(), 0);
    e[i] = 1;
    e[static_cast<std::size_t>(aux[i])] = 1;
    gens.push_back({{e, I.field().one()}, {Exponent(vars.size(), 0), -I.field().one()}});
  }
  return PolyBasis{vars, I.field(), order, groebner_basis(gens, order)};
}

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

class RingElement;

/// R = k[x_1^{±1},...,x_n^{±1}] / I, finite-dimensional, with a monomial basis.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  /// Builds the ring; throws InfiniteDimensional when the quotient is not
  /// finite-dimensional and CostGuardExceeded past dim_guard.
  static RingPtr create(const Ideal& I, std::size_t dim_guard = 20000) {
    return create_impl(I, dim_guard, true);
  }

  /// k[x_1..x_n]/I without inverting the variables.
  static RingPtr create_polynomial(const Ideal& I, std::size_t dim_guard = 20000) {
    return create_impl(I, dim_guard, false);
  }

  static RingPtr create(const std::vector<std::string>& vars, Field f, const std::vector<std::string>& relations,
                        std::size_t dim_guard = 20000) {
    return create(Ideal::parse(vars, f, relations), dim_guard);
  }

  bool laurent() const { return laurent_; }

 private:
  static RingPtr create_impl(const Ideal& I, std::size_t dim_guard, bool laurent) {
    const std::size_t n = I.vars().size();
    std::vector<bool> want_aux(n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& g : I.generators())
        if (g.min_exponent()[i] < 0) want_aux[i] = true;
    // First try with only the inverse variables the generators need; add the
    // rest when some variable is not invertible in the polynomial quotient.
    for (int attempt = 0; attempt < 2; ++attempt) {
      auto ring = std::shared_ptr<QuotientRing>(new QuotientRing(I));
      ring->laurent_ = laurent;
      const bool finite = ring->build(want_aux, dim_guard);
      if (finite && !laurent) return ring;
      require(finite || laurent, ErrorKind::InfiniteDimensional, "quotient ring is infinite-dimensional");
      if (finite) {
        std::vector<std::size_t> missing;
        for (std::size_t i = 0; i < n; ++i)
          if (ring->aux_[i] < 0 && !ring->variable_invertible(i)) missing.push_back(i);
        if (missing.empty()) return ring;
        for (auto i : missing) want_aux[i] = true;
      } else {
        require(attempt == 0, ErrorKind::InfiniteDimensional, "quotient ring is infinite-dimensional");
        std::fill(want_aux.begin(), want_aux.end(), true);
      }
    }
    auto ring = std::shared_ptr<QuotientRing>(new QuotientRing(I));
    ring->laurent_ = laurent;
    require(ring->build(want_aux, dim_guard), ErrorKind::InfiniteDimensional, "quotient ring is infinite-dimensional");
    return ring;
  }

 public:
  const Ideal& ideal() const { return ideal_; }
  const std::vector<std::string>& vars() const { return ideal_.vars(); }
  const Field& field() const { return ideal_.field(); }
  const PolyBasis& groebner() const { return gb_; }
  std::size_t dim() const { return basis_.size(); }

  /// Standard monomials in the polynomialized ring.
  const std::vector<Exponent>& standard_monomials() const { return basis_; }

  /// Basis element i as a Laurent monomial in the original variables.
  LaurentPoly basis_monomial(std::size_t i) const {
    const std::size_t n = vars().size();
    Exponent e(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      e[v] = basis_[i][v];
      if (aux_[v] >= 0) e[v] -= basis_[i][static_cast<std::size_t>(aux_[v])];
    }
    return LaurentPoly::monomial(vars(), field(), e, field().one());
  }

  std::vector<LaurentPoly> basis_monomials() const {
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_monomial(i));
    return out;
  }

  /// Coordinates of nf(f) over the monomial basis.
  Vector reduce(const LaurentPoly& f) const {
    require(f.vars() == vars(), ErrorKind::VariableMismatch, "polynomial lives in another ring");
    require(f.field() == field(), ErrorKind::CharacteristicMismatch, "polynomial over another field");
    const std::size_t n = vars().size();
    Exponent shift(n, 0);
    bool shifted = false;
    if (!f.is_zero()) {
      const Exponent lo = f.min_exponent();
      for (std::size_t v = 0; v < n; ++v)
        if (aux_[v] < 0 && lo[v] < 0) {
          shift[v] = -lo[v];
          shifted = true;
        }
    }
    if (!shifted) return coords_of(cocert::reduce(detail::polynomialize(f, aux_, gb_.vars.size(), gb_.order), gb_.polys, gb_.order));
    const Vector v = coords_of(
        cocert::reduce(detail::polynomialize(f.shifted(shift), aux_, gb_.vars.size(), gb_.order), gb_.polys, gb_.order));
    const Vector m = reduce(LaurentPoly::monomial(vars(), field(), shift, field().one()));
    const auto sol = solve_linear(multiplication_matrix(m), v);
    require(sol.solvable(), ErrorKind::InvalidArgument, "monomial is not invertible in the quotient");
    return *sol.solution;
  }

  /// Evaluates an expression in the ring; negative powers and division use
  /// ring inverses, so "(x+y)^-2" is accepted when x+y is a unit.
  Vector reduce(const std::string& src) const;

  /// nf(b_i * b_j).
  const Vector& product_of_basis(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }

  Vector multiply(const Vector& a, const Vector& b) const {
    Vector r = zero_vector(field(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j].is_zero()) continue;
        const Scalar c = a[i] * b[j];
        const Vector& p = product_of_basis(i, j);
        for (std::size_t t = 0; t < dim(); ++t)
          if (!p[t].is_zero()) r[t] += c * p[t];
      }
    }
    return r;
  }

  /// Matrix of g -> a*g.
  Matrix multiplication_matrix(const Vector& a) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vector col = zero_vector(field(), dim());
      for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        const Vector& p = product_of_basis(i, j);
        for (std::size_t t = 0; t < dim(); ++t)
          if (!p[t].is_zero()) col[t] += a[i] * p[t];
      }
      for (std::size_t t = 0; t < dim(); ++t) m(t, j) = col[t];
    }
    return m;
  }

  Vector one() const { return reduce(LaurentPoly::constant(vars(), field(), field().one())); }

  /// Laurent polynomial representative of coordinates.
  LaurentPoly lift(const Vector& a) const {
    LaurentPoly r(vars(), field());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!a[i].is_zero()) r = r + LaurentPoly::constant(vars(), field(), a[i]) * basis_monomial(i);
    return r;
  }

  std::string str(const Vector& a) const { return lift(a).str(); }

  RingElement element(const LaurentPoly& f) const;
  RingElement element(const std::string& src) const;
  RingElement element(Vector coords) const;

 private:
  explicit QuotientRing(Ideal I) : ideal_(std::move(I)) {}

  bool build(const std::vector<bool>& want_aux, std::size_t dim_guard) {
    const std::size_t n = vars().size();
    aux_.assign(n, -1);
    std::vector<std::string> pv = vars();
    for (std::size_t i = 0; i < n; ++i)
      if (want_aux[i]) {
        aux_[i] = static_cast<int>(pv.size());
        pv.push_back(vars()[i] + "_inv");
      }
    const auto order = MonomialOrder::DegRevLex;
    std::vector<SortedPoly> gens;
    for (const auto& g : ideal_.generators()) gens.push_back(detail::polynomialize(g, aux_, pv.size(), order));
    for (std::size_t i = 0; i < n; ++i) {
      if (aux_[i] < 0) continue;
      Exponent e(pv.size(), 0);
      e[i] = 1;
      e[static_cast<std::size_t>(aux_[i])] = 1;
      gens.push_back({{e, field().one()}, {Exponent(pv.size(), 0), -field().one()}});
    }
    gb_ = PolyBasis{pv, field(), order, groebner_basis(gens, order)};

    // zero-dimensional iff every variable has a pure power as a leading monomial
    for (std::size_t v = 0; v < pv.size(); ++v) {
      bool pure = false;
      for (const auto& g : gb_.polys) {
        const Exponent& lm = g.front().exp;
        bool only_v = true;
        for (std::size_t w = 0; w < pv.size(); ++w)
          if (w != v && lm[w] != 0) only_v = false;
        if (only_v) pure = true;
      }
      if (!pure) return false;
    }

    basis_.clear();
    index_.clear();
    std::vector<Exponent> stack;
    if (!gb_.is_unit_ideal()) stack.push_back(Exponent(pv.size(), 0));
    while (!stack.empty()) {
      Exponent e = std::move(stack.back());
      stack.pop_back();
      if (index_.count(e)) continue;
      bool standard = true;
      for (const auto& g : gb_.polys)
        if (divides(g.front().exp, e)) standard = false;
      if (!standard) continue;
      index_.emplace(e, 0);
      basis_.push_back(e);
      require(basis_.size() <= dim_guard, ErrorKind::CostGuardExceeded,
              "quotient dimension exceeds guard " + std::to_string(dim_guard));
      for (std::size_t v = 0; v < pv.size(); ++v) {
        Exponent next = e;
        ++next[v];
        if (!index_.count(next)) stack.push_back(std::move(next));
      }
    }
    std::sort(basis_.begin(), basis_.end(),
              [order](const Exponent& a, const Exponent& b) { return compare_monomials(a, b, order) < 0; });
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;

    mult_.assign(basis_.size() * basis_.size(), Vector());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i; j < basis_.size(); ++j) {
        Exponent e(pv.size());
        for (std::size_t v = 0; v < pv.size(); ++v) e[v] = basis_[i][v] + basis_[j][v];
        Vector c = index_.count(e) ? unit_vector(field(), basis_.size(), index_.at(e))
                                   : coords_of(cocert::reduce({{e, field().one()}}, gb_.polys, order));
        mult_[j * basis_.size() + i] = c;
        mult_[i * basis_.size() + j] = std::move(c);
      }
    return true;
  }

  bool variable_invertible(std::size_t v) const {
    if (dim() == 0) return true;
    return rank(multiplication_matrix(reduce_poly_var(v))) == dim();
  }

  Vector reduce_poly_var(std::size_t v) const {
    Exponent e(gb_.vars.size(), 0);
    e[v] = 1;
    return coords_of(cocert::reduce({{e, field().one()}}, gb_.polys, gb_.order));
  }

  Vector coords_of(const SortedPoly& rem) const {
    Vector c = zero_vector(field(), dim());
    for (const auto& t : rem) c[index_.at(t.exp)] += t.coeff;
    return c;
  }

  Ideal ideal_;
  bool laurent_ = true;
  std::vector<int> aux_;
  PolyBasis gb_;
  std::vector<Exponent> basis_;
  std::map<Exponent, std::size_t> index_;
  std::vector<Vector> mult_;
};

/// An element of a QuotientRing, stored by coordinates.
class RingElement {
 public:
  RingElement(RingPtr ring, Vector coords) : ring_(std::move(ring)), c_(std::move(coords)) {
    require(c_.size() == ring_->dim(), ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
  }

  const RingPtr& ring() const { return ring_; }
  const Vector& coords() const { return c_; }
  bool is_zero() const { return cocert::is_zero(c_); }
  bool is_one() const { return c_ == ring_->one(); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    a.check(b);
    return {a.ring_, a.c_ + b.c_};
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    a.check(b);
    return {a.ring_, a.c_ - b.c_};
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check(b);
    return {a.ring_, a.ring_->multiply(a.c_, b.c_)};
  }
  friend RingElement operator*(const Scalar& s, const RingElement& a) { return {a.ring_, s * a.c_}; }

  RingElement pow(std::uint64_t e) const {
    RingElement r(ring_, ring_->one()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

  Matrix multiplication_matrix() const { return ring_->multiplication_matrix(c_); }
  LaurentPoly lift() const { return ring_->lift(c_); }
  std::string str() const { return ring_->str(c_); }

 private:
  void check(const RingElement& o) const {
    require(ring_ == o.ring_, ErrorKind::VariableMismatch, "elements of different rings");
  }

  RingPtr ring_;
  Vector c_;
};

inline RingElement QuotientRing::element(const LaurentPoly& f) const { return {shared_from_this(), reduce(f)}; }
inline RingElement QuotientRing::element(const std::string& src) const { return {shared_from_this(), reduce(src)}; }
inline RingElement QuotientRing::element(Vector coords) const { return {shared_from_this(), std::move(coords)}; }

inline RingElement normal_form(const LaurentPoly& f, const RingPtr& R) { return R->element(f); }

inline Matrix multiplication_matrix(const RingElement& f) { return f.multiplication_matrix(); }

/// The inverse of f when it exists.
inline std::optional<RingElement> inverse_of(const RingElement& f) {
  const auto sol = solve_linear(f.multiplication_matrix(), f.ring()->one());
  if (!sol.solvable() || !sol.kernel.empty()) return std::nullopt;
  return f.ring()->element(*sol.solution);
}

inline bool is_invertible(const RingElement& f) { return inverse_of(f).has_value(); }

namespace detail {

struct RingPolicy {
  using value_type = RingElement;
  RingPtr ring;

  RingElement constant(const BigInt& v) const { return ring->field().from_bigint(v) * RingElement(ring, ring->one()); }
  RingElement variable(std::size_t i) const {
    return ring->element(LaurentPoly::variable(ring->vars(), ring->field(), i));
  }
  RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
  RingElement sub(const RingElement& a, const RingElement& b) const { return a - b; }
  RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
  std::optional<RingElement> divide(const RingElement& a, const RingElement& b) const {
    auto inv = inverse_of(b);
    if (!inv) return std::nullopt;
    return a * *inv;
  }
  std::optional<RingElement> power(const RingElement& a, long e) const {
    if (e >= 0) return a.pow(static_cast<std::uint64_t>(e));
    auto inv = inverse_of(a);
    if (!inv) return std::nullopt;
    return inv->pow(static_cast<std::uint64_t>(-e));
  }
};

}  // namespace detail

inline Vector QuotientRing::reduce(const std::string& src) const {
  return detail::ExprParser<detail::RingPolicy>(src, vars(), detail::RingPolicy{shared_from_this()}).parse().coords();
}

/// Matrix of x -> x^2 on the monomial basis (char 2 only, where it is linear).
inline Matrix frobenius_map(const QuotientRing& R) {
  require(R.field().characteristic() == 2, ErrorKind::WrongCharacteristic,
          "Frobenius map needs characteristic 2, got " + R.field().name());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < R.dim(); ++i) cols.push_back(R.product_of_basis(i, i));
  return Matrix::from_columns(R.field(), cols, R.dim());
}

inline Subspace frobenius_kernel(const QuotientRing& R) {
  return Subspace::span(R.field(), R.dim(), kernel_basis(frobenius_map(R)));
}

inline RingElement frobenius(const RingElement& f) {
  require(f.ring()->field().characteristic() == 2, ErrorKind::WrongCharacteristic, "Frobenius needs characteristic 2");
  return f * f;
}

/// Smallest ideal containing the subspace S (closure under basis multiplication).
inline Subspace ideal_closure(const QuotientRing& R, const Subspace& S) {
  Subspace out(R.field(), R.dim());
  for (const auto& v : S.basis())
    for (std::size_t i = 0; i < R.dim(); ++i) out.add(R.multiply(unit_vector(R.field(), R.dim(), i), v));
  return out;
}

inline Subspace ideal_span(const QuotientRing& R, const std::vector<Vector>& gens) {
  return ideal_closure(R, Subspace::span(R.field(), R.dim(), gens));
}

inline Subspace ideal_span(const std::vector<RingElement>& gens) {
  require(!gens.empty(), ErrorKind::InvalidArgument, "ideal_span needs the ring; pass at least one element");
  std::vector<Vector> v;
  for (const auto& g : gens) v.push_back(g.coords());
  return ideal_span(*gens.front().ring(), v);
}

inline bool ideal_equal(const Subspace& I, const Subspace& J, const QuotientRing& R) {
  return ideal_closure(R, I) == ideal_closure(R, J);
}

/// True when all pairwise products of the basis of S vanish.
inline bool square_is_zero(const QuotientRing& R, const Subspace& S) {
  for (const auto& a : S.basis())
    for (const auto& b : S.basis())
      if (!is_zero(R.multiply(a, b))) return false;
  return true;
}

/// Buchberger criterion asserted on the ring's stored basis.
inline bool groebner_verified(const QuotientRing& R) {
  return s_pairs_reduce_to_zero(R.groebner().polys, R.groebner().order) && is_reduced_basis(R.groebner().polys);
}

}  // namespace cocert
