#pragma once

// Landau-Ginzburg superpotentials of toric Fano varieties: Jacobian rings,
// critical points, Morse/A2 classification and split-generation verdicts.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocert/ainfinity.hpp"
#include "cocert/eigen.hpp"

namespace cocert {

struct FanData {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::vector<long>> normals;
  friend bool operator==(const FanData&, const FanData&) = default;
};

namespace detail {

/// Exact phase-one simplex (Bland's rule): is target in the cone spanned by gens?
inline bool cone_contains(const std::vector<std::vector<long>>& gens, const std::vector<long>& target) {
  const Field Q(0);
  const std::size_t m = target.size(), n = gens.size();
  // columns: gens, then one artificial per row, then rhs
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Scalar>> T(m + 1, std::vector<Scalar>(cols, Q.zero()));
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = target[r] < 0;
    for (std::size_t j = 0; j < n; ++j) T[r][j] = Q.from_int(flip ? -gens[j][r] : gens[j][r]);
    T[r][n + r] = Q.one();
    T[r][cols - 1] = Q.from_int(flip ? -target[r] : target[r]);
  }
  std::vector<std::size_t> basic(m);
  for (std::size_t r = 0; r < m; ++r) basic[r] = n + r;
  // objective row: minimize sum of artificials, expressed in non-basic terms
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < cols; ++c) T[m][c] -= T[r][c];
  for (std::size_t r = 0; r < m; ++r) T[m][n + r] = Q.zero();

  while (true) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c + 1 < cols; ++c)
      if (T[m][c].to_rational() < 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (!(T[r][enter].to_rational() > 0)) continue;
      const Rational ratio = (T[r][cols - 1] / T[r][enter]).to_rational();
      if (leave == m || ratio < best || (ratio == best && basic[r] < basic[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase one
    const Scalar piv = T[leave][enter].inv();
    for (auto& v : T[leave]) v *= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || T[r][enter].is_zero()) continue;
      const Scalar f = T[r][enter];
      for (std::size_t c = 0; c < cols; ++c) T[r][c] -= f * T[leave][c];
    }
    basic[leave] = enter;
  }
  return T[m][cols - 1].is_zero();
}

}  // namespace detail

/// Normals must have the right length, be distinct and nonzero, and positively span R^n.
inline void validate_fan(const FanData& fan) {
  require(fan.dim >= 1, ErrorKind::Parse, "fan dimension must be positive");
  require(!fan.normals.empty(), ErrorKind::Parse, "fan has no normals");
  for (const auto& v : fan.normals) {
    require(v.size() == fan.dim, ErrorKind::Parse,
            "normal of length " + std::to_string(v.size()) + " in a fan of dimension " + std::to_string(fan.dim));
    bool nz = false;
    for (long c : v) nz = nz || c != 0;
    require(nz, ErrorKind::InvalidArgument, "zero normal");
  }
  for (std::size_t i = 0; i < fan.normals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(fan.normals[i] != fan.normals[j], ErrorKind::InvalidArgument, "repeated normal");
  for (const auto& v : fan.normals) {
    std::vector<long> neg(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) neg[t] = -v[t];
    require(detail::cone_contains(fan.normals, neg), ErrorKind::InvalidArgument,
            "normals do not positively span R^" + std::to_string(fan.dim));
  }
}

inline std::vector<std::string> default_variables(std::size_t n) {
  static const char* const small[] = {"x", "y", "z"};
  if (n <= 3) return std::vector<std::string>(small, small + n);
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

/// W = sum over normals e of x^e.
inline LaurentPoly potential_from_fan(const FanData& fan, Field f) {
  validate_fan(fan);
  const auto vars = default_variables(fan.dim);
  LaurentPoly W(vars, f);
  for (const auto& e : fan.normals) {
    Exponent ex(e.begin(), e.end());
    W.add_term(ex, f.one());
  }
  return W;
}

inline std::vector<LaurentPoly> partials(const LaurentPoly& W) {
  std::vector<LaurentPoly> d;
  for (std::size_t i = 0; i < W.nvars(); ++i) d.push_back(W.derivative(i));
  return d;
}

inline RingPtr jacobian_ring(const LaurentPoly& W, std::size_t dim_guard = 20000) {
  return QuotientRing::create(Ideal(W.vars(), W.field(), partials(W)), dim_guard);
}

using Point = std::vector<Scalar>;

inline bool is_critical(const LaurentPoly& W, const Point& rho) {
  require(rho.size() == W.nvars(), ErrorKind::DimensionMismatch, "point has wrong dimension");
  for (const auto& s : rho)
    if (s.is_zero()) return false;
  for (const auto& d : partials(W))
    if (!d.eval(rho).is_zero()) return false;
  return true;
}

struct CritSearch {
  std::vector<Point> points;
  bool complete = false;         // every ground-field critical point was found
  std::string method;            // "scan" or "eigen"
};

namespace detail {

inline std::vector<Matrix> coordinate_operators(const QuotientRing& R) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < R.vars().size(); ++i)
    ops.push_back(R.multiplication_matrix(R.reduce(LaurentPoly::variable(R.vars(), R.field(), i))));
  return ops;
}

}  // namespace detail

/// GF(p): exhaustive scan of (k^x)^n, guarded by scan_limit. QQ: joint
/// eigenvalues of the coordinate multiplication operators on the Jacobian ring.
inline CritSearch critical_points(const LaurentPoly& W, std::uint64_t scan_limit = 10'000'000) {
  const Field& f = W.field();
  const std::size_t n = W.nvars();
  CritSearch out;
  if (f.characteristic() != 0) {
    const std::uint64_t p = f.characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      require(total <= scan_limit / (p - 1 ? p - 1 : 1), ErrorKind::CostGuardExceeded,
              "critical point scan exceeds guard " + std::to_string(scan_limit));
      total *= p - 1;
    }
    require(total <= scan_limit, ErrorKind::CostGuardExceeded,
            "critical point scan exceeds guard " + std::to_string(scan_limit));
    const auto d = partials(W);
    std::vector<std::uint64_t> idx(n, 1);
    for (std::uint64_t c = 0; c < total; ++c) {
      Point pt;
      for (std::size_t i = 0; i < n; ++i) pt.push_back(f.from_int(static_cast<std::int64_t>(idx[i])));
      bool crit = true;
      for (const auto& di : d)
        if (!di.eval(pt).is_zero()) {
          crit = false;
          break;
        }
      if (crit) out.points.push_back(pt);
      for (std::size_t i = n; i-- > 0;) {
        if (++idx[i] < p) break;
        idx[i] = 1;
      }
    }
    out.complete = true;
    out.method = "scan";
    return out;
  }
  const RingPtr R = jacobian_ring(W);
  const auto ops = detail::coordinate_operators(*R);
  std::vector<std::vector<Scalar>> candidates;
  for (const auto& M : ops) {
    const RootSet rs = ground_field_roots(characteristic_polynomial(M), scan_limit);
    std::vector<Scalar> c;
    for (const auto& [r, m] : rs.roots)
      if (!r.is_zero()) c.push_back(r);
    candidates.push_back(std::move(c));
  }
  std::vector<Scalar> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.points.push_back(cur);
      return;
    }
    for (const auto& v : candidates[i]) {
      cur.push_back(v);
      std::vector<Matrix> sub(ops.begin(), ops.begin() + static_cast<long>(i + 1));
      if (joint_generalized_eigenspace(sub, cur).dim() > 0) rec(i + 1);
      cur.pop_back();
    }
  };
  if (R->dim() > 0) rec(0);
  out.complete = true;  // the rational root test is exhaustive
  out.method = "eigen";
  return out;
}

/// Hessian of W at rho.
inline Matrix hessian(const LaurentPoly& W, const Point& rho) {
  const std::size_t n = W.nvars();
  Matrix H(W.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly di = W.derivative(i);
    for (std::size_t j = 0; j < n; ++j) H(i, j) = di.derivative(j).eval(rho);
  }
  return H;
}

/// D^3 W(v, v, v) at rho.
inline Scalar cubic_form(const LaurentPoly& W, const Point& rho, const Vector& v) {
  const std::size_t n = W.nvars();
  Scalar s = W.field().zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    const LaurentPoly di = W.derivative(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const LaurentPoly dij = di.derivative(j);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) s += dij.derivative(k).eval(rho) * v[i] * v[j] * v[k];
    }
  }
  return s;
}

struct Congruence {
  Matrix P;  // P^T H P = D
  Matrix D;
};

/// Symmetric Gaussian congruence to diagonal form (char != 2).
inline Congruence congruence_diagonalize(const Matrix& H) {
  require(H.field().characteristic() != 2, ErrorKind::WrongCharacteristic, "symmetric congruence needs char != 2");
  const std::size_t n = H.rows();
  const Field& f = H.field();
  Matrix A = H, P = Matrix::identity(f, n);
  // column op c_j += s c_i together with row op r_j += s r_i
  auto add = [&](std::size_t j, std::size_t i, const Scalar& s) {
    for (std::size_t r = 0; r < n; ++r) A(r, j) += s * A(r, i);
    for (std::size_t c = 0; c < n; ++c) A(j, c) += s * A(i, c);
    for (std::size_t r = 0; r < n; ++r) P(r, j) += s * P(r, i);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(P(r, i), P(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (A(k, k).is_zero()) {
      std::size_t piv = n;
      for (std::size_t j = k + 1; j < n && piv == n; ++j)
        if (!A(j, j).is_zero()) piv = j;
      if (piv != n) {
        swap(k, piv);
      } else {
        for (std::size_t j = k + 1; j < n && piv == n; ++j)
          if (!A(k, j).is_zero()) piv = j;
        if (piv == n) continue;
        add(k, piv, f.one());  // A(k,k) becomes 2 A(k,piv)
      }
    }
    const Scalar inv = A(k, k).inv();
    for (std::size_t j = k + 1; j < n; ++j)
      if (!A(k, j).is_zero()) add(j, k, -(A(k, j) * inv));
  }
  return {P, A};
}

/// Solves H a = rho_l * l.
inline LinearSolution star_solvability_hessian(const Matrix& H, const std::vector<long>& l, const Scalar& rho_l) {
  require(H.field().characteristic() != 2, ErrorKind::WrongCharacteristic, "Hessian criterion needs char != 2");
  require(l.size() == H.rows(), ErrorKind::DimensionMismatch, "l has wrong length");
  Vector rhs;
  for (long c : l) rhs.push_back(rho_l * H.field().from_int(c));
  return solve_linear(H, rhs);
}

enum class CritType { Morse, A2, Other };

inline std::string to_string(CritType t) {
  switch (t) {
    case CritType::Morse: return "Morse";
    case CritType::A2: return "A2";
    default: return "Other";
  }
}

struct CritReport {
  Point rho;
  Scalar value;
  Matrix hessian;
  std::size_t rank = 0;
  CritType type = CritType::Other;
  std::string detail;
  std::size_t local_dim = 0;
  std::vector<std::string> local_basis;
  std::optional<Vector> kernel_direction;
};

namespace detail {

/// Projection onto the joint generalized eigenspace at rho along the sum of
/// the images of (M_i - rho_i)^d.
struct LocalSummand {
  Subspace space;
  std::vector<std::string> basis_names;
};

inline LocalSummand local_summand(const QuotientRing& R, const Point& rho) {
  const auto ops = coordinate_operators(R);
  const std::size_t d = R.dim();
  const Subspace V = joint_generalized_eigenspace(ops, rho);
  std::vector<Vector> comp;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Matrix p = shifted_power(ops[i], rho[i], d);
    for (std::size_t c = 0; c < d; ++c) comp.push_back(p.col(c));
  }
  const Subspace C = Subspace::span(R.field(), d, comp);
  std::vector<Vector> cols = V.basis();
  const std::size_t vdim = cols.size();
  for (const auto& b : C.basis()) cols.push_back(b);
  const Matrix B = Matrix::from_columns(R.field(), cols, d);
  LocalSummand out{V, {}};
  Subspace chosen(R.field(), d);
  for (std::size_t m = 0; m < d && chosen.dim() < vdim; ++m) {
    const auto sol = solve_linear(B, unit_vector(R.field(), d, m));
    if (!sol.solvable()) continue;
    Vector proj = zero_vector(R.field(), d);
    for (std::size_t t = 0; t < vdim; ++t) proj = proj + (*sol.solution)[t] * cols[t];
    if (chosen.add(proj)) out.basis_names.push_back(R.basis_monomial(m).str());
  }
  return out;
}

}  // namespace detail

inline CritReport classify_critical_point(const LaurentPoly& W, const Point& rho, const RingPtr& jac = nullptr) {
  require(W.field().characteristic() != 2, ErrorKind::WrongCharacteristic, "classification needs char != 2");
  require(is_critical(W, rho), ErrorKind::NotCritical, "point is not a critical point of W");
  CritReport rep;
  rep.rho = rho;
  rep.value = W.eval(rho);
  rep.hessian = hessian(W, rho);
  rep.rank = rank(rep.hessian);
  const std::size_t n = W.nvars();
  const RingPtr R = jac ? jac : jacobian_ring(W);
  const auto local = detail::local_summand(*R, rho);
  rep.local_dim = local.space.dim();
  rep.local_basis = local.basis_names;
  if (rep.rank == n) {
    rep.type = CritType::Morse;
    rep.detail = "nondegenerate Hessian";
  } else if (rep.rank + 1 == n) {
    const auto ker = kernel_basis(rep.hessian);
    rep.kernel_direction = ker.front();
    if (W.field().characteristic() == 3) {
      rep.type = CritType::Other;
      rep.detail = "corank 1; cubic test needs char != 3";
    } else if (!cubic_form(W, rho, ker.front()).is_zero()) {
      rep.type = CritType::A2;
      rep.detail = "corank 1, nonzero cubic term along the kernel";
    } else {
      rep.type = CritType::Other;
      rep.detail = "corank 1, cubic term vanishes";
    }
  } else {
    rep.type = CritType::Other;
    rep.detail = "corank " + std::to_string(n - rep.rank);
  }
  if (rep.type == CritType::Morse)
    require(rep.local_dim == 1, ErrorKind::HypothesisViolation, "Morse point with local ring of dimension != 1");
  if (rep.type == CritType::A2)
    require(rep.local_dim == 2, ErrorKind::HypothesisViolation, "A2 point with local ring of dimension != 2");
  return rep;
}

/// CO^0(f) = f(rho) * 1.
inline Scalar co0_fibre(const RingElement& f, const LaurentPoly& W, const Point& rho) {
  require(is_critical(W, rho), ErrorKind::NotCritical, "point is not a critical point of W");
  return f.lift().eval(rho);
}

/// Component x_i -> prod_k y_k^{M_ki}.
inline Point monomial_map(const std::vector<std::vector<int>>& M, const Point& y) {
  const std::size_t n = y.size();
  Point x;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar v = y.front().field().one();
    for (std::size_t k = 0; k < n; ++k) {
      const int e = M[k][i];
      const Scalar b = e >= 0 ? y[k] : y[k].inv();
      for (int t = 0; t < (e >= 0 ? e : -e); ++t) v *= b;
    }
    x.push_back(v);
  }
  return x;
}

struct A2Witness {
  Congruence congruence;
  std::size_t kernel_index = 0;
  LinearSolution hessian_star;
  bool clifford_checked = false;
  bool clifford_star_infeasible = false;
};

struct ValueVerdict {
  Scalar value;
  std::vector<std::size_t> points;
  std::size_t summand_dim = 0;
  bool all_morse = false;
  bool co0_injective = false;
  bool costar_certified = false;
  bool split_generates = false;
  std::string status;
  std::vector<A2Witness> witnesses;
};

struct FibreReport {
  LaurentPoly W;
  std::size_t jacobian_dim = 0;
  std::vector<CritReport> points;
  std::vector<ValueVerdict> values;
  bool local_dims_sum_to_dim = false;
  bool eigen_crosscheck = false;
  std::vector<std::string> axioms;
};

inline A2Witness a2_witness(const CritReport& c) {
  A2Witness w{congruence_diagonalize(c.hessian), 0, {}, false, false};
  const std::size_t n = c.hessian.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (w.congruence.D(i, i).is_zero()) w.kernel_index = i;
  std::vector<long> l(n, 0);
  l[w.kernel_index] = 1;
  const Field& f = c.hessian.field();
  w.hessian_star = star_solvability_hessian(w.congruence.D, l, f.one());
  if (n <= 6) {
    const CliffordPresentation cl(w.congruence.D);
    const AInfAlgebra A = cl.algebra();
    std::vector<Vector> ys;
    std::vector<Scalar> cs;
    for (std::size_t q = 0; q < n; ++q) {
      ys.push_back(unit_vector(f, cl.dim(), std::size_t{1} << q));
      cs.push_back(q == w.kernel_index ? f.one() : f.zero());
    }
    w.clifford_checked = true;
    w.clifford_star_infeasible = !equation_star_solver(A, ys, cs, A.unit().value()).solvable();
  }
  return w;
}

inline FibreReport split_generation_verdict(const LaurentPoly& W, std::uint64_t scan_limit = 10'000'000,
                                            std::size_t dim_guard = 20000) {
  const auto p = W.field().characteristic();
  require(p != 2 && p != 3, ErrorKind::WrongCharacteristic, "verdicts need char != 2, 3");
  FibreReport rep;
  rep.W = W;
  const RingPtr R = jacobian_ring(W, dim_guard);
  rep.jacobian_dim = R->dim();
  const CritSearch cs = critical_points(W, scan_limit);
  require(cs.complete, ErrorKind::IncompleteCritSearch, "critical point search is incomplete");
  std::size_t total = 0;
  for (const auto& pt : cs.points) {
    rep.points.push_back(classify_critical_point(W, pt, R));
    total += rep.points.back().local_dim;
  }
  rep.local_dims_sum_to_dim = total == R->dim();
  require(rep.local_dims_sum_to_dim, ErrorKind::IncompleteCritSearch,
          "critical points outside the ground field: local rings span " + std::to_string(total) + " of " +
              std::to_string(R->dim()));

  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    const Scalar& v = rep.points[i].value;
    auto [it, fresh] = slot.try_emplace(v.str(), rep.values.size());
    if (fresh) rep.values.push_back(ValueVerdict{v, {}, 0, false, false, false, false, "", {}});
    ValueVerdict& vv = rep.values[it->second];
    vv.points.push_back(i);
    vv.summand_dim += rep.points[i].local_dim;
  }

  const Matrix MW = R->multiplication_matrix(R->reduce(W));
  const Eigendecomposition eig = generalized_eigendecomposition(MW, scan_limit);
  bool cross = eig.exhaustive && eig.blocks.size() == rep.values.size();
  for (const auto& b : eig.blocks) {
    auto it = slot.find(b.value.str());
    cross = cross && it != slot.end() && rep.values[it->second].summand_dim == b.basis.size();
  }
  rep.eigen_crosscheck = cross;

  for (auto& vv : rep.values) {
    bool morse = true, morse_or_a2 = true;
    for (std::size_t i : vv.points) {
      const auto t = rep.points[i].type;
      morse = morse && t == CritType::Morse;
      morse_or_a2 = morse_or_a2 && t != CritType::Other;
    }
    vv.all_morse = morse;
    vv.co0_injective = morse;
    if (morse) {
      vv.costar_certified = true;
      vv.status = "all points Morse: CO^0 injective on the summand";
    } else if (morse_or_a2) {
      bool ok = true;
      for (std::size_t i : vv.points) {
        if (rep.points[i].type != CritType::A2) continue;
        A2Witness w = a2_witness(rep.points[i]);
        ok = ok && !w.hessian_star.solvable() && (!w.clifford_checked || w.clifford_star_infeasible);
        vv.witnesses.push_back(std::move(w));
      }
      vv.costar_certified = ok;
      vv.status = ok ? "Morse or A2 points: CO^* injective since the obstruction equation has no solution"
                     : "A2 witness failed";
    } else {
      vv.status = "not certified by this toolkit";
    }
    vv.split_generates = vv.costar_certified;
  }
  rep.axioms = {"the torus fibre at each critical point is wide",
                "HF(T, rho) is the Clifford algebra of the Hessian of W at rho",
                "CO^0(f) = f(rho) * 1 on the fibre at rho",
                "CO^* injective on a summand implies split-generation of that summand"};
  return rep;
}

}  // namespace cocert
