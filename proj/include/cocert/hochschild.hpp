#pragma once

// Hochschild cohomology of monogenic algebras k[u]/(f).

#include <string>
#include <utility>
#include <vector>

#include "cocert/ainfinity.hpp"

namespace cocert {

class MonicAlgebra {
 public:
  explicit MonicAlgebra(UniPoly f) : f_(std::move(f)) {
    require(f_.degree() >= 1, ErrorKind::InvalidArgument, "f must have degree at least 1");
    ring_ = QuotientRing::create_polynomial(Ideal({"u"}, f_.field(), {LaurentPoly::from_unipoly(f_, "u")}));
  }

  static MonicAlgebra parse(const std::string& f, Field k) {
    return MonicAlgebra(parse_laurent(f, {"u"}, k).to_unipoly());
  }

  const UniPoly& f() const { return f_; }
  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return f_.field(); }
  std::size_t dim() const { return ring_->dim(); }

  RingElement element(const UniPoly& p) const { return ring_->element(LaurentPoly::from_unipoly(p, "u")); }
  RingElement element(const std::string& src) const { return ring_->element(src); }
  RingElement u_power(std::size_t m) const { return element(UniPoly::monomial(field(), m, field().one())); }
  RingElement f_derivative() const { return element(f_.derivative()); }

  /// Coefficient vector of a degree < dim representative.
  UniPoly representative(const RingElement& x) const {
    return x.lift().to_unipoly();
  }

 private:
  UniPoly f_;
  RingPtr ring_;
};

/// dim HH^0..HH^{k_max}: A, then Ann_A(f') for odd k and A/(f') for even k.
inline std::vector<std::size_t> hh_dims_holm(const MonicAlgebra& alg, std::size_t k_max) {
  const std::size_t d = alg.dim();
  const std::size_t rk = rank(alg.f_derivative().multiplication_matrix());
  std::vector<std::size_t> out{d};
  for (std::size_t k = 1; k <= k_max; ++k) out.push_back(d - rk);  // kernel and cokernel have equal size
  return out;
}

namespace detail {

/// Matrix of the bar differential C^k -> C^{k+1}, C^k = Hom(A^{(x)k}, A):
/// (dc)(x_1..x_{k+1}) = x_1 c(x_2..) + sum (-1)^i c(.., x_i x_{i+1}, ..) + (-1)^{k+1} c(..x_k) x_{k+1}.
inline Matrix bar_differential(const AInfAlgebra& A, std::size_t k) {
  const std::size_t d = A.dim();
  const Field& f = A.field();
  const std::size_t src = ipow(d, k), dst = ipow(d, k + 1);
  Matrix M(f, dst * d, src * d);
  std::vector<Vector> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = A.mu_basis({i, j});
  const Scalar minus = -f.one();
  for (std::size_t c = 0; c < dst; ++c) {
    const auto x = decode_tuple(c, d, k + 1);
    // x_1 * c(x_2..x_{k+1})
    {
      std::size_t tau = 0;
      for (std::size_t t = 1; t <= k; ++t) tau = tau * d + x[t];
      for (std::size_t o = 0; o < d; ++o) {
        const Vector& p = table[x[0] * d + o];
        for (std::size_t out = 0; out < d; ++out)
          if (!p[out].is_zero()) M(c * d + out, tau * d + o) += p[out];
      }
    }
    for (std::size_t i = 1; i <= k; ++i) {
      const Vector& p = table[x[i - 1] * d + x[i]];
      const Scalar sgn = i % 2 ? minus : f.one();
      for (std::size_t m = 0; m < d; ++m) {
        if (p[m].is_zero()) continue;
        std::size_t tau = 0;
        for (std::size_t t = 0; t <= k; ++t) {
          if (t == i) continue;
          tau = tau * d + (t == i - 1 ? m : x[t]);
        }
        for (std::size_t out = 0; out < d; ++out) M(c * d + out, tau * d + out) += sgn * p[m];
      }
    }
    {
      std::size_t tau = 0;
      for (std::size_t t = 0; t < k; ++t) tau = tau * d + x[t];
      const Scalar sgn = (k + 1) % 2 ? minus : f.one();
      for (std::size_t o = 0; o < d; ++o) {
        const Vector& p = table[o * d + x[k]];
        for (std::size_t out = 0; out < d; ++out)
          if (!p[out].is_zero()) M(c * d + out, tau * d + o) += sgn * p[out];
      }
    }
  }
  return M;
}

}  // namespace detail

/// dim HH^k of the associative algebra (mu^2 of A) by exact linear algebra
/// on the full Hochschild complex. Guarded to dim A <= 5, k <= 3.
inline std::size_t bar_hh_oracle(const AInfAlgebra& A, std::size_t k) {
  require(A.dim() <= 5 && k <= 3, ErrorKind::CostGuardExceeded, "bar oracle limited to dim <= 5 and k <= 3");
  const std::size_t d = A.dim();
  const std::size_t cochains = ipow(d, k + 1);
  const std::size_t cycles = cochains - rank(detail::bar_differential(A, k));
  const std::size_t bounds = k == 0 ? 0 : rank(detail::bar_differential(A, k - 1));
  return cycles - bounds;
}

inline std::size_t bar_hh_oracle(const MonicAlgebra& alg, std::size_t k) {
  return bar_hh_oracle(AInfAlgebra::from_ring(*alg.ring()), k);
}

/// A degree-1 class, determined by a = h(u) with a f' = 0.
class HH1Class {
 public:
  HH1Class(const MonicAlgebra& alg, RingElement a) : alg_(&alg), a_(std::move(a)) {
    require((a_ * alg.f_derivative()).is_zero(), ErrorKind::HypothesisViolation, "a does not annihilate f'");
  }

  const RingElement& a() const { return a_; }
  const MonicAlgebra& algebra() const { return *alg_; }

  /// h(u^m) = a m u^{m-1}, extended to polynomials.
  RingElement apply(const UniPoly& p) const { return a_ * alg_->element(p.derivative()); }

  /// Matrix of h on the monomial basis 1, u, ..., u^{d-1}.
  Matrix matrix() const {
    std::vector<Vector> cols;
    const Field& k = alg_->field();
    for (std::size_t m = 0; m < alg_->dim(); ++m) cols.push_back(apply(UniPoly::monomial(k, m, k.one())).coords());
    return Matrix::from_columns(k, cols, alg_->dim());
  }

 private:
  const MonicAlgebra* alg_;
  RingElement a_;
};

namespace detail {

inline void require_char2_fprime0(const MonicAlgebra& alg) {
  require(alg.field().characteristic() == 2, ErrorKind::HypothesisViolation, "formula needs characteristic 2");
  require(alg.f().derivative().is_zero(), ErrorKind::HypothesisViolation, "formula needs f' = 0");
}

}  // namespace detail

/// E = sum over odd j of f_{2j} u^{2j-2}.
inline RingElement yoneda_factor(const MonicAlgebra& alg) {
  const Field& k = alg.field();
  UniPoly e(k);
  for (long j = 1; 2 * j <= alg.f().degree(); j += 2)
    e = e + UniPoly::monomial(k, static_cast<std::size_t>(2 * j - 2), alg.f().coeff(static_cast<std::size_t>(2 * j)));
  return alg.element(e);
}

/// psi(h1 * h2) = psi(h1) psi(h2) E.
inline RingElement yoneda_deg1(const HH1Class& h1, const HH1Class& h2) {
  require(&h1.algebra() == &h2.algebra(), ErrorKind::InvalidArgument, "classes of different algebras");
  detail::require_char2_fprime0(h1.algebra());
  return h1.a() * h2.a() * yoneda_factor(h1.algebra());
}

struct PsiConsistency {
  RingElement lhs;  // s'(u) * h(s(u))
  RingElement rhs;  // h(u)
  bool holds = false;
};

inline PsiConsistency psi_consistency(const HH1Class& h, const UniPoly& s) {
  detail::require_char2_fprime0(h.algebra());
  const MonicAlgebra& alg = h.algebra();
  RingElement lhs = alg.element(s.derivative()) * h.apply(s);
  const bool eq = lhs == h.a();
  return {std::move(lhs), h.a(), eq};
}

/// The 2-cocycle attached to z: c(u^i, u^j) = z * q where u^{i+j} = q f + r.
inline Matrix carry_cocycle(const MonicAlgebra& alg, const RingElement& z) {
  const std::size_t d = alg.dim();
  const Field& k = alg.field();
  Matrix c(k, d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const UniPoly q = UniPoly::monomial(k, i + j, k.one()).divmod(alg.f()).first;
      const Vector v = (z * alg.element(q)).coords();
      for (std::size_t o = 0; o < d; ++o) c(o, i * d + j) = v[o];
    }
  return c;
}

/// Chain-level cup product (h1 u h2)(a, b) = h1(a) h2(b) as a d x d^2 matrix.
inline Matrix cup_product(const HH1Class& h1, const HH1Class& h2) {
  const MonicAlgebra& alg = h1.algebra();
  const std::size_t d = alg.dim();
  const Matrix m1 = h1.matrix(), m2 = h2.matrix();
  Matrix c(alg.field(), d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector v = alg.ring()->multiply(m1.col(i), m2.col(j));
      for (std::size_t o = 0; o < d; ++o) c(o, i * d + j) = v[o];
    }
  return c;
}

struct YonedaCheck {
  bool cocycle_cup = false;
  bool cocycle_formula = false;
  bool cohomologous = false;
  std::optional<Vector> primitive;
};

/// Whether cup(h1,h2) - carry_cocycle(psi(h1) psi(h2) E) = d g for a 1-cochain g.
inline YonedaCheck yoneda_chain_check(const HH1Class& h1, const HH1Class& h2) {
  const MonicAlgebra& alg = h1.algebra();
  const std::size_t d = alg.dim();
  const AInfAlgebra A = AInfAlgebra::from_ring(*alg.ring());
  const Matrix cup = cup_product(h1, h2);
  const Matrix rep = carry_cocycle(alg, yoneda_deg1(h1, h2));
  auto flat = [&](const Matrix& m) {
    Vector v(d * d * d);
    for (std::size_t t = 0; t < d * d; ++t)
      for (std::size_t o = 0; o < d; ++o) v[t * d + o] = m(o, t);
    return v;
  };
  const Matrix d1 = detail::bar_differential(A, 1);
  const Matrix d2 = detail::bar_differential(A, 2);
  YonedaCheck res;
  res.cocycle_cup = is_zero(d2 * flat(cup));
  res.cocycle_formula = is_zero(d2 * flat(rep));
  const auto sol = solve_linear(d1, flat(cup) - flat(rep));
  res.cohomologous = sol.solvable();
  res.primitive = sol.solution;
  return res;
}

struct Hypothesis {
  std::string name;
  std::string status;  // checked | failed | axiom | skipped
  std::string detail;
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct Certificate {
  std::vector<Hypothesis> hypotheses;
  std::string conclusion;
  std::vector<std::string> axioms;
  bool issued = false;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Span of the powers 1, x, x^2, ... of an element.
inline Subspace generated_subalgebra(const RingElement& x) {
  const QuotientRing& R = *x.ring();
  Subspace s(R.field(), R.dim());
  Vector p = R.one();
  while (s.add(p)) p = R.multiply(p, x.coords());
  return s;
}

/// Non-formality certificate for k[u]/(f) with generator r = u^t.
inline Certificate nonformality_certificate(const MonicAlgebra& alg, std::size_t t, bool pairing_flag,
                                            std::size_t sweep_limit = 14) {
  require(alg.field().characteristic() == 2, ErrorKind::HypothesisViolation, "non-formality criterion needs char 2");
  Certificate cert;
  cert.axioms = {"L is wide and admits a perfect Morse function",
                 "HF(L,L) is isomorphic to k[u]/(f) as an algebra",
                 "S(gamma)^2 = 1 in QH(X)"};
  bool ok = true;
  auto add = [&](std::string name, bool pass, std::string detail) {
    cert.hypotheses.push_back({std::move(name), pass ? "checked" : "failed", std::move(detail)});
    ok = ok && pass;
  };

  const bool fprime0 = alg.f().derivative().is_zero();
  add("(i) f' = 0", fprime0, "f = " + alg.f().str("u"));

  const RingElement E = yoneda_factor(alg);
  const bool e_inv = is_invertible(E);
  add("(ii) E invertible", e_inv, "E = " + E.str());

  const RingElement r = alg.u_power(t);
  const Subspace gen = generated_subalgebra(r);
  add("(iii) r generates A", gen.dim() == alg.dim(),
      "r = u^" + std::to_string(t) + ", span of powers has dim " + std::to_string(gen.dim()) + " of " +
          std::to_string(alg.dim()));

  if (pairing_flag) {
    cert.hypotheses.push_back({"<Psi(r), l> = 1", "axiom", "geometric input supplied by the caller"});
    cert.axioms.push_back("<Psi(r), l> = 1 for r = u^" + std::to_string(t));
  } else {
    cert.hypotheses.push_back({"<Psi(r), l> = 1", "failed", "pairing not asserted"});
    ok = false;
  }

  // (iv) elements with s' = 0 are combinations of even powers; those span a
  // proper subalgebra, so none of them generates A.
  {
    const QuotientRing& R = *alg.ring();
    Subspace even(R.field(), R.dim());
    for (std::size_t m = 0; m < alg.dim(); m += 2) even.add(alg.u_power(m).coords());
    bool closed = true;
    for (const auto& a : even.basis())
      for (const auto& b : even.basis())
        if (!even.contains(R.multiply(a, b))) closed = false;
    const bool proper = even.dim() < R.dim();
    add("(iv) s' = 0 implies s generates a proper subalgebra", fprime0 && closed && proper,
        "even-power subalgebra has dim " + std::to_string(even.dim()) + (closed ? ", closed" : ", not closed"));
  }

  if (fprime0 && alg.dim() <= sweep_limit) {
    const QuotientRing& R = *alg.ring();
    const std::size_t d = R.dim();
    std::vector<Vector> deriv;
    for (std::size_t m = 0; m < d; ++m) deriv.push_back(alg.element(UniPoly::monomial(alg.field(), m, alg.field().one()).derivative()).coords());
    bool sweep = true;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d) && sweep; ++bits) {
      Vector sp = zero_vector(R.field(), d);
      for (std::size_t m = 0; m < d; ++m)
        if (bits >> m & 1) sp = sp + deriv[m];
      if (is_zero(sp)) continue;
      if (is_zero(R.multiply(R.multiply(sp, sp), E.coords()))) sweep = false;
    }
    add("exhaustive sweep: (s')^2 E = 0 implies s' = 0", sweep, std::to_string(std::uint64_t{1} << d) + " elements");
  } else {
    cert.hypotheses.push_back({"exhaustive sweep", "skipped", "dim " + std::to_string(alg.dim()) + " above sweep limit"});
  }

  cert.issued = ok;
  cert.conclusion = ok ? "the A-infinity algebra of L is not formal"
                       : "no certificate: a hypothesis failed";
  return cert;
}

}  // namespace cocert
