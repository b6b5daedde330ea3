#pragma once

// A-infinity algebras by structure constants, Hochschild cochains and their
// differential, equation (*) solving, Massey products, Clifford algebras.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocert/quotient.hpp"

namespace cocert {

struct BasisElement {
  std::string name;
  int deg = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseVec sparse_of(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

namespace detail {

// out += coef * F(in[0], ..., in[k-1]) where F is stored flat in written order.
inline void accumulate_multilinear(const std::vector<Scalar>& flat, std::size_t d, const std::vector<SparseVec>& in,
                                   std::size_t slot, std::size_t offset, const Scalar& coef, Vector& out) {
  if (slot == in.size()) {
    const std::size_t base = offset * d;
    for (std::size_t o = 0; o < d; ++o)
      if (!flat[base + o].is_zero()) out[o] += coef * flat[base + o];
    return;
  }
  for (const auto& [idx, c] : in[slot])
    accumulate_multilinear(flat, d, in, slot + 1, offset * d + idx, coef * c, out);
}

inline std::vector<std::size_t> decode_tuple(std::size_t code, std::size_t d, std::size_t k) {
  std::vector<std::size_t> t(k);
  for (std::size_t s = k; s-- > 0;) {
    t[s] = code % d;
    code /= d;
  }
  return t;
}

}  // namespace detail

/// Finite-dimensional A-infinity algebra: mu^k stored for the arities set.
/// Inputs are always listed in written order (a_k, ..., a_1).
class AInfAlgebra {
 public:
  AInfAlgebra() = default;
  AInfAlgebra(Field f, std::vector<BasisElement> basis, bool graded = true)
      : field_(f), basis_(std::move(basis)), graded_(graded) {}

  /// The associative algebra of a quotient ring (mu^2 = product, degree 0).
  static AInfAlgebra from_ring(const QuotientRing& R, bool graded = false) {
    std::vector<BasisElement> b;
    for (std::size_t i = 0; i < R.dim(); ++i) b.push_back({R.basis_monomial(i).str(), 0});
    AInfAlgebra A(R.field(), b, graded);
    for (std::size_t i = 0; i < R.dim(); ++i)
      for (std::size_t j = 0; j < R.dim(); ++j) A.set_mu({i, j}, R.product_of_basis(i, j));
    A.set_unit(R.one());
    return A;
  }

  /// Plain associative algebra from a bilinear product on basis elements.
  static AInfAlgebra from_product(Field f, std::vector<BasisElement> basis,
                                  const std::function<Vector(std::size_t, std::size_t)>& prod, bool graded = true) {
    AInfAlgebra A(f, std::move(basis), graded);
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) A.set_mu({i, j}, prod(i, j));
    return A;
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return graded_ ? ((basis_[i].deg % 2) + 2) % 2 : 0; }
  bool graded() const { return graded_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].name == name) return i;
    fail(ErrorKind::InvalidArgument, "no basis element named " + name);
  }

  std::size_t arity_bound() const { return mu_.empty() ? 0 : mu_.rbegin()->first; }
  bool has_mu(std::size_t k) const { return mu_.count(k) > 0; }
  const std::map<std::size_t, std::vector<Scalar>>& all_mu() const { return mu_; }

  /// Declares mu^k (all zero) so relation checks treat it as known.
  void declare_mu(std::size_t k) {
    if (!mu_.count(k)) mu_[k] = std::vector<Scalar>(ipow(dim(), k + 1), field_.zero());
  }

  void set_mu(const std::vector<std::size_t>& inputs, const Vector& out) {
    require(out.size() == dim(), ErrorKind::DimensionMismatch, "mu output has wrong length");
    declare_mu(inputs.size());
    auto& flat = mu_[inputs.size()];
    const std::size_t base = code(inputs) * dim();
    for (std::size_t o = 0; o < dim(); ++o) flat[base + o] = out[o];
  }

  void set_mu_flat(std::size_t k, std::vector<Scalar> flat) {
    require(flat.size() == ipow(dim(), k + 1), ErrorKind::DimensionMismatch, "mu^k array has wrong length");
    mu_[k] = std::move(flat);
  }

  Vector mu_basis(const std::vector<std::size_t>& inputs) const {
    Vector out = zero_vector(field_, dim());
    auto it = mu_.find(inputs.size());
    if (it == mu_.end()) return out;
    const std::size_t base = code(inputs) * dim();
    for (std::size_t o = 0; o < dim(); ++o) out[o] = it->second[base + o];
    return out;
  }

  /// mu^k evaluated on arbitrary vectors (multilinear expansion).
  Vector mu(const std::vector<Vector>& inputs) const {
    Vector out = zero_vector(field_, dim());
    auto it = mu_.find(inputs.size());
    if (it == mu_.end()) return out;
    std::vector<SparseVec> in;
    for (const auto& v : inputs) in.push_back(sparse_of(v));
    detail::accumulate_multilinear(it->second, dim(), in, 0, 0, field_.one(), out);
    return out;
  }

  Vector product(const Vector& a, const Vector& b) const { return mu({a, b}); }

  void set_unit(Vector u) { unit_ = std::move(u); }
  const std::optional<Vector>& unit() const { return unit_; }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

  std::size_t code(const std::vector<std::size_t>& inputs) const {
    std::size_t c = 0;
    for (auto i : inputs) c = c * dim() + i;
    return c;
  }

  friend bool operator==(const AInfAlgebra& a, const AInfAlgebra& b) {
    return a.field_ == b.field_ && a.basis_ == b.basis_ && a.graded_ == b.graded_ && a.mu_ == b.mu_;
  }

 private:
  Field field_;
  std::vector<BasisElement> basis_;
  bool graded_ = true;
  std::map<std::size_t, std::vector<Scalar>> mu_;
  std::optional<Vector> unit_;
};

struct RelationCheck {
  bool ok = true;
  std::size_t arity = 0;
  std::vector<std::size_t> inputs;
  Vector value;
};

/// Verifies sum (-1)^{|a_1|+...+|a_i|+i} mu(.., mu^j(..), a_i, .., a_1) = 0 on
/// all basis tuples of total arity 1..m. Unset mu^k count as zero.
inline RelationCheck check_ainf_relations(const AInfAlgebra& A, std::size_t m) {
  const std::size_t d = A.dim();
  const Field& f = A.field();
  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t count = ipow(d, k);
    for (std::size_t c = 0; c < count; ++c) {
      const auto a = detail::decode_tuple(c, d, k);  // a[0] = a_k, ..., a[k-1] = a_1
      Vector total = zero_vector(f, d);
      for (std::size_t j = 1; j <= k; ++j) {
        if (!A.has_mu(j) || !A.has_mu(k + 1 - j)) continue;
        for (std::size_t i = 0; i + j <= k; ++i) {
          int sign = static_cast<int>(i);
          for (std::size_t t = 1; t <= i; ++t) sign += A.degree(a[k - t]);
          std::vector<std::size_t> inner(a.begin() + static_cast<long>(k - i - j), a.begin() + static_cast<long>(k - i));
          const Vector mid = A.mu_basis(inner);
          if (is_zero(mid)) continue;
          std::vector<Vector> outer;
          for (std::size_t t = 0; t < k - i - j; ++t) outer.push_back(A.basis_vector(a[t]));
          outer.push_back(mid);
          for (std::size_t t = k - i; t < k; ++t) outer.push_back(A.basis_vector(a[t]));
          const Vector v = A.mu(outer);
          total = (sign % 2) ? total - v : total + v;
        }
      }
      if (!is_zero(total)) return {false, k, a, total};
    }
  }
  return {};
}

/// h = (h^0, ..., h^L); h^k stored flat like mu^k. parity is the Z/2 degree r.
struct HochschildCochain {
  int parity = 0;
  std::vector<std::vector<Scalar>> comps;

  static HochschildCochain zero(const Field& f, std::size_t d, std::size_t length, int parity) {
    HochschildCochain h;
    h.parity = ((parity % 2) + 2) % 2;
    for (std::size_t k = 0; k <= length; ++k) h.comps.emplace_back(ipow(d, k + 1), f.zero());
    return h;
  }

  std::size_t length() const { return comps.size() - 1; }

  Vector value(std::size_t d, const std::vector<std::size_t>& inputs) const {
    Vector out(d);
    std::size_t c = 0;
    for (auto i : inputs) c = c * d + i;
    for (std::size_t o = 0; o < d; ++o) out[o] = comps[inputs.size()][c * d + o];
    return out;
  }

  void set(std::size_t d, const std::vector<std::size_t>& inputs, const Vector& out) {
    std::size_t c = 0;
    for (auto i : inputs) c = c * d + i;
    for (std::size_t o = 0; o < d; ++o) comps[inputs.size()][c * d + o] = out[o];
  }

  bool is_zero() const {
    for (const auto& c : comps)
      for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
  }

  friend HochschildCochain operator+(HochschildCochain a, const HochschildCochain& b) {
    for (std::size_t k = 0; k < a.comps.size() && k < b.comps.size(); ++k)
      for (std::size_t i = 0; i < a.comps[k].size(); ++i) a.comps[k][i] += b.comps[k][i];
    return a;
  }
  friend HochschildCochain operator*(const Scalar& s, HochschildCochain a) {
    for (auto& c : a.comps)
      for (auto& x : c) x *= s;
    return a;
  }
  friend bool operator==(const HochschildCochain&, const HochschildCochain&) = default;
};

/// Whether entry (inputs -> out) of a parity-r cochain respects the grading.
inline bool homogeneous_slot(const AInfAlgebra& A, const std::vector<std::size_t>& inputs, std::size_t out, int r) {
  if (!A.graded()) return true;
  int s = r - static_cast<int>(inputs.size());
  for (auto i : inputs) s += A.degree(i);
  return ((s - A.degree(out)) % 2 + 2) % 2 == 0;
}

/// Literal: the signs exactly as displayed below. Bracket: the second sum
/// carries (-1)^{r+|a_1|+..+|a_i|+i} instead, which makes d the commutator
/// with mu (d o d = 0 whenever the A-infinity relations hold).
enum class SignRule { Literal, Bracket };

/// Hochschild differential, components 0..out_length:
///   (dh)^k(a_k..a_1) = sum (-1)^{(r+1)(|a_1|+..+|a_i|+i)} mu^{k+1-j}(a_k..a_{i+j+1}, h^j(a_{i+j}..a_{i+1}), a_i..a_1)
///                    + sum (-1)^{r+1+|a_1|+..+|a_i|+i}   h^{k+1-j}(a_k..a_{i+j+1}, mu^j(a_{i+j}..a_{i+1}), a_i..a_1)
/// Missing components of h count as zero; h must reach out_length.
inline HochschildCochain hochschild_differential(const AInfAlgebra& A, const HochschildCochain& h,
                                                 std::size_t out_length, SignRule rule = SignRule::Bracket) {
  require(h.length() >= out_length, ErrorKind::DimensionMismatch, "cochain shorter than requested output");
  const std::size_t d = A.dim();
  const Field& f = A.field();
  const int r = h.parity;
  HochschildCochain out = HochschildCochain::zero(f, d, out_length, r + 1);
  for (std::size_t k = 0; k <= out_length; ++k) {
    const std::size_t count = ipow(d, k);
    for (std::size_t c = 0; c < count; ++c) {
      const auto a = detail::decode_tuple(c, d, k);
      Vector total = zero_vector(f, d);
      for (std::size_t i = 0; i <= k; ++i) {
        int deg_i = static_cast<int>(i);
        for (std::size_t t = 1; t <= i; ++t) deg_i += A.degree(a[k - t]);
        for (std::size_t j = 0; i + j <= k; ++j) {
          std::vector<std::size_t> inner(a.begin() + static_cast<long>(k - i - j), a.begin() + static_cast<long>(k - i));
          // first sum: h^j inside mu^{k+1-j}
          if (A.has_mu(k + 1 - j)) {
            const Vector mid = h.value(d, inner);
            if (!is_zero(mid)) {
              std::vector<Vector> outer;
              for (std::size_t t = 0; t < k - i - j; ++t) outer.push_back(A.basis_vector(a[t]));
              outer.push_back(mid);
              for (std::size_t t = k - i; t < k; ++t) outer.push_back(A.basis_vector(a[t]));
              const Vector v = A.mu(outer);
              total = ((r + 1) * deg_i) % 2 ? total - v : total + v;
            }
          }
          // second sum: mu^j inside h^{k+1-j}
          if (j >= 1 && A.has_mu(j) && k + 1 - j <= h.length()) {
            const Vector mid = A.mu_basis(inner);
            if (!is_zero(mid)) {
              std::vector<SparseVec> in;
              for (std::size_t t = 0; t < k - i - j; ++t) in.push_back({{a[t], f.one()}});
              in.push_back(sparse_of(mid));
              for (std::size_t t = k - i; t < k; ++t) in.push_back({{a[t], f.one()}});
              Vector v = zero_vector(f, d);
              detail::accumulate_multilinear(h.comps[k + 1 - j], d, in, 0, 0, f.one(), v);
              const int e = r + deg_i + (rule == SignRule::Literal ? 1 : 0);
              total = e % 2 ? total - v : total + v;
            }
          }
        }
      }
      out.set(d, a, total);
    }
  }
  return out;
}

struct CoboundaryResult {
  bool is_coboundary = false;
  std::optional<HochschildCochain> primitive;
  std::vector<Scalar> extra_coefficients;
  std::optional<Vector> certificate;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t length = 0;
};

/// Decides whether h = dg + sum c_e * extra_e holds on output components
/// 0..L for some g of parity r-1 (and scalars c_e). Matching only the
/// truncation is necessary for h to be a coboundary, so a negative answer
/// is a proof that h is not one.
inline CoboundaryResult is_coboundary_through_length(const AInfAlgebra& A, const HochschildCochain& h, std::size_t L,
                                                     const std::vector<HochschildCochain>& extra = {},
                                                     SignRule rule = SignRule::Bracket) {
  require(L <= 2, ErrorKind::CostGuardExceeded, "coboundary test supports length at most 2");
  require(h.length() >= L, ErrorKind::DimensionMismatch, "cochain shorter than the test length");
  const std::size_t d = A.dim();
  const Field& f = A.field();
  const int gp = h.parity + 1;

  auto flatten = [&](const HochschildCochain& c) {
    Vector v;
    for (std::size_t k = 0; k <= L; ++k) v.insert(v.end(), c.comps[k].begin(), c.comps[k].end());
    return v;
  };

  std::vector<Vector> columns;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (component, flat index)
  for (std::size_t k = 0; k <= L; ++k) {
    const std::size_t count = ipow(d, k);
    for (std::size_t c = 0; c < count; ++c) {
      const auto in = detail::decode_tuple(c, d, k);
      for (std::size_t o = 0; o < d; ++o) {
        if (!homogeneous_slot(A, in, o, gp)) continue;
        HochschildCochain g = HochschildCochain::zero(f, d, L, gp);
        g.comps[k][c * d + o] = f.one();
        columns.push_back(flatten(hochschild_differential(A, g, L, rule)));
        slots.emplace_back(k, c * d + o);
      }
    }
  }
  for (const auto& e : extra) columns.push_back(flatten(e));
  const Vector rhs = flatten(h);

  CoboundaryResult res;
  res.length = L;
  res.unknowns = columns.size();
  res.equations = rhs.size();
  const auto sol = solve_linear(Matrix::from_columns(f, columns, rhs.size()), rhs);
  if (!sol.solvable()) {
    res.certificate = sol.certificate;
    return res;
  }
  res.is_coboundary = true;
  HochschildCochain g = HochschildCochain::zero(f, d, L, gp);
  for (std::size_t s = 0; s < slots.size(); ++s) g.comps[slots[s].first][slots[s].second] = (*sol.solution)[s];
  res.primitive = g;
  for (std::size_t e = 0; e < extra.size(); ++e) res.extra_coefficients.push_back((*sol.solution)[slots.size() + e]);
  return res;
}

/// The cochain with h^0 = unit and all higher components zero.
inline HochschildCochain unit_cochain(const AInfAlgebra& A, std::size_t length) {
  require(A.unit().has_value(), ErrorKind::InvalidArgument, "algebra has no declared unit");
  HochschildCochain h = HochschildCochain::zero(A.field(), A.dim(), length, 0);
  h.set(A.dim(), {}, *A.unit());
  return h;
}

struct StarResult {
  std::optional<Vector> solution;
  std::optional<Vector> certificate;
  bool solvable() const { return solution.has_value(); }
};

/// Finds a with mu^2(a, y) + mu^2(y, a) = c(y) * target for every y in ys.
inline StarResult equation_star_solver(const AInfAlgebra& A, const std::vector<Vector>& ys, const std::vector<Scalar>& c,
                                       const Vector& target) {
  require(ys.size() == c.size(), ErrorKind::DimensionMismatch, "one functional value per degree-1 vector");
  const std::size_t d = A.dim();
  const Field& f = A.field();
  Matrix M(f, ys.size() * d, d);
  Vector rhs;
  for (std::size_t s = 0; s < ys.size(); ++s) {
    for (std::size_t col = 0; col < d; ++col) {
      const Vector e = A.basis_vector(col);
      const Vector v = A.product(e, ys[s]) + A.product(ys[s], e);
      for (std::size_t row = 0; row < d; ++row) M(s * d + row, col) = v[row];
    }
    const Vector t = c[s] * target;
    rhs.insert(rhs.end(), t.begin(), t.end());
  }
  const auto sol = solve_linear(M, rhs);
  return {sol.solution, sol.certificate};
}

/// CO cochain: h^0 = rho_l * 1 and h^k(x_k..x_1) = rho_l * l*(x_k)...l*(x_1) * 1
/// on degree-1 basis inputs; every other entry is zero.
inline HochschildCochain build_co_cochain(const AInfAlgebra& A, const Vector& lstar, const Scalar& rho_l,
                                          std::size_t k_max) {
  require(A.unit().has_value(), ErrorKind::InvalidArgument, "algebra has no declared unit");
  require(lstar.size() == A.dim(), ErrorKind::DimensionMismatch, "functional has wrong length");
  const std::size_t d = A.dim();
  const Vector one = *A.unit();
  HochschildCochain h = HochschildCochain::zero(A.field(), d, k_max, 0);
  h.set(d, {}, rho_l * one);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t count = ipow(d, k);
    for (std::size_t c = 0; c < count; ++c) {
      const auto in = detail::decode_tuple(c, d, k);
      Scalar v = rho_l;
      for (auto i : in) v *= (A.basis()[i].deg == 1) ? lstar[i] : A.field().zero();
      if (!v.is_zero()) h.set(d, in, v * one);
    }
  }
  return h;
}

/// The equator in S^2 over GF(2): basis {1, u}, mu^2 of GF(2)[u]/(u^2+1),
/// mu^3 per configuration 'a' or 'b'. mu^4 is declared zero.
inline AInfAlgebra circle_model(char config) {
  require(config == 'a' || config == 'b', ErrorKind::InvalidArgument, "circle configuration must be 'a' or 'b'");
  const Field f(2);
  AInfAlgebra A(f, {{"1", 0}, {"u", 1}}, true);
  const Vector one = unit_vector(f, 2, 0), u = unit_vector(f, 2, 1);
  A.set_mu({0, 0}, one);
  A.set_mu({0, 1}, u);
  A.set_mu({1, 0}, u);
  A.set_mu({1, 1}, one);
  A.declare_mu(1);
  A.declare_mu(3);
  A.set_mu({1, 1, 1}, one);
  if (config == 'b') {
    A.set_mu({1, 0, 1}, u);
    A.set_mu({0, 1, 1}, u);
  }
  A.declare_mu(4);
  A.set_unit(one);
  return A;
}

struct MasseyResult {
  Vector value;
  Subspace indeterminacy;
  Vector residue;
  bool nontrivial = false;
  std::vector<std::pair<std::vector<std::size_t>, Vector>> terms;  // nonzero mu^3 contributions
};

/// mu^3(x, x, x) with the indeterminacy mu^2(x, A) + mu^2(A, x).
inline MasseyResult massey_triple(const AInfAlgebra& A, const Vector& x) {
  require(is_zero(A.product(x, x)), ErrorKind::ObstructedMassey, "mu^2(x,x) is nonzero");
  const std::size_t d = A.dim();
  MasseyResult res;
  res.value = zero_vector(A.field(), d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const Scalar coef = x[a] * x[b] * x[c];
        if (coef.is_zero()) continue;
        const Vector v = coef * A.mu_basis({a, b, c});
        if (is_zero(v)) continue;
        res.terms.push_back({{a, b, c}, v});
        res.value = res.value + v;
      }
  res.indeterminacy = Subspace(A.field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    res.indeterminacy.add(A.product(x, A.basis_vector(i)));
    res.indeterminacy.add(A.product(A.basis_vector(i), x));
  }
  res.residue = res.indeterminacy.reduce(res.value);
  res.nontrivial = !is_zero(res.residue);
  return res;
}

/// Clifford algebra on y_1..y_n with y_p y_q + y_q y_p = H_pq. Basis: subsets
/// as bitmasks, y_S = product over S in increasing order.
class CliffordPresentation {
 public:
  explicit CliffordPresentation(Matrix H) : H_(std::move(H)) {
    require(H_.is_square(), ErrorKind::DimensionMismatch, "Hessian must be square");
    require(H_.field().characteristic() != 2, ErrorKind::WrongCharacteristic, "Clifford relations need char != 2");
    for (std::size_t p = 0; p < n(); ++p)
      for (std::size_t q = 0; q < n(); ++q)
        require(H_(p, q) == H_(q, p), ErrorKind::InvalidArgument, "Hessian must be symmetric");
    require(n() < 16, ErrorKind::CostGuardExceeded, "too many Clifford generators");
    half_ = H_.field().from_int(2).inv();
  }

  std::size_t n() const { return H_.rows(); }
  std::size_t dim() const { return std::size_t{1} << n(); }
  const Matrix& hessian() const { return H_; }
  const Field& field() const { return H_.field(); }

  static std::string name(std::size_t mask) {
    if (!mask) return "1";
    std::string s;
    for (std::size_t i = 0; mask >> i; ++i)
      if (mask >> i & 1) s += (s.empty() ? "" : "*") + std::string("y") + std::to_string(i + 1);
    return s;
  }

  /// y_S * y_q in normal form.
  Vector times_generator(std::size_t mask, std::size_t q) const {
    Vector out = zero_vector(field(), dim());
    add_times_generator(out, field().one(), mask, q);
    return out;
  }

  Vector multiply_basis(std::size_t s, std::size_t t) const {
    Vector cur = unit_vector(field(), dim(), s);
    for (std::size_t q = 0; q < n(); ++q) {
      if (!(t >> q & 1)) continue;
      Vector next = zero_vector(field(), dim());
      for (std::size_t m = 0; m < dim(); ++m)
        if (!cur[m].is_zero()) add_times_generator(next, cur[m], m, q);
      cur = std::move(next);
    }
    return cur;
  }

  Vector multiply(const Vector& a, const Vector& b) const {
    Vector out = zero_vector(field(), dim());
    for (std::size_t s = 0; s < dim(); ++s) {
      if (a[s].is_zero()) continue;
      for (std::size_t t = 0; t < dim(); ++t)
        if (!b[t].is_zero()) out = out + (a[s] * b[t]) * multiply_basis(s, t);
    }
    return out;
  }

  /// As an algebra with mu^2 = Clifford product and generators in degree 1.
  AInfAlgebra algebra() const {
    std::vector<BasisElement> b;
    for (std::size_t m = 0; m < dim(); ++m) b.push_back({name(m), __builtin_popcountll(m)});
    AInfAlgebra A = AInfAlgebra::from_product(field(), b, [&](std::size_t s, std::size_t t) { return multiply_basis(s, t); });
    A.set_unit(unit_vector(field(), dim(), 0));
    return A;
  }

  /// y_q y_p rewritten by the relation, compared with the direct normal form,
  /// for all pairs; plus associativity on all generator triples.
  bool relations_consistent() const {
    for (std::size_t p = 0; p < n(); ++p)
      for (std::size_t q = 0; q < n(); ++q) {
        const Vector yq_yp = times_generator(std::size_t{1} << q, p);
        const Vector yp_yq = times_generator(std::size_t{1} << p, q);
        Vector want = H_(p, q) * unit_vector(field(), dim(), 0) - yp_yq;
        if (yq_yp != want) return false;
      }
    for (std::size_t s = 0; s < dim(); ++s)
      for (std::size_t t = 0; t < dim(); ++t)
        for (std::size_t q = 0; q < n(); ++q) {
          const std::size_t g = std::size_t{1} << q;
          if (multiply(multiply_basis(s, t), unit_vector(field(), dim(), g)) !=
              multiply(unit_vector(field(), dim(), s), multiply_basis(t, g)))
            return false;
        }
    return true;
  }

 private:
  void add_times_generator(Vector& out, const Scalar& coef, std::size_t mask, std::size_t q) const {
    if (coef.is_zero()) return;
    if (!mask) {
      out[std::size_t{1} << q] += coef;
      return;
    }
    std::size_t last = 63 - static_cast<std::size_t>(__builtin_clzll(mask));
    if (last < q) {
      out[mask | (std::size_t{1} << q)] += coef;
      return;
    }
    const std::size_t rest = mask & ~(std::size_t{1} << last);
    if (last == q) {
      // y_q^2 = H_qq / 2
      out[rest] += coef * H_(q, q) * half_;
      return;
    }
    // y_rest y_last y_q = -(y_rest y_q) y_last + H_{last,q} y_rest
    out[rest] += coef * H_(last, q);
    Vector tmp = zero_vector(field(), dim());
    add_times_generator(tmp, field().one(), rest, q);
    for (std::size_t m = 0; m < dim(); ++m)
      if (!tmp[m].is_zero()) add_times_generator(out, -coef * tmp[m], m, last);
  }

  Matrix H_;
  Scalar half_;
};

inline CliffordPresentation clifford_from_hessian(const Matrix& H) { return CliffordPresentation(H); }

}  // namespace cocert
