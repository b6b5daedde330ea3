#pragma once

// Characteristic polynomials and generalized eigenspaces over the ground field.

#include <utility>
#include <vector>

#include "cocert/quotient.hpp"
#include "cocert/unipoly.hpp"

namespace cocert {

/// Similar upper Hessenberg form.
inline Matrix hessenberg(Matrix h) {
  require(h.is_square(), ErrorKind::DimensionMismatch, "Hessenberg form of a non-square matrix");
  const std::size_t n = h.rows();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Scalar inv = h(j + 1, j).inv();
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j).is_zero()) continue;
      const Scalar f = h(r, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= f * h(j + 1, c);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) += f * h(rr, r);
    }
  }
  return h;
}

/// det(t I - M).
inline UniPoly characteristic_polynomial(const Matrix& m) {
  const Field f = m.field();
  const Matrix h = hessenberg(m);
  const std::size_t n = h.rows();
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly(f, {f.one()});
  const UniPoly t(f, {f.zero(), f.one()});
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (t - UniPoly(f, {h(k - 1, k - 1)})) * p[k - 1];
    Scalar prod = f.one();
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      p[k] = p[k] - (prod * h(i, k - 1)) * p[i];
    }
  }
  return p[n];
}

struct EigenBlock {
  Scalar value;
  std::size_t multiplicity = 0;
  std::vector<Vector> basis;
};

struct Eigendecomposition {
  UniPoly charpoly;
  std::vector<EigenBlock> blocks;
  bool exhaustive = false;
};

inline Matrix shifted_power(const Matrix& m, const Scalar& lambda, std::size_t e) {
  return (m - lambda * Matrix::identity(m.field(), m.rows())).pow(e);
}

/// Generalized eigenspaces ker (M - λ)^n for each eigenvalue λ in the ground field.
inline Eigendecomposition generalized_eigendecomposition(const Matrix& m, std::uint64_t scan_limit = 10'000'000) {
  require(m.is_square(), ErrorKind::DimensionMismatch, "eigendecomposition of a non-square matrix");
  Eigendecomposition out;
  out.charpoly = characteristic_polynomial(m);
  const std::size_t n = m.rows();
  if (n == 0) {
    out.exhaustive = true;
    return out;
  }
  const RootSet roots = ground_field_roots(out.charpoly, scan_limit);
  std::size_t total = 0;
  for (const auto& [lambda, mult] : roots.roots) {
    EigenBlock b{lambda, mult, kernel_basis(shifted_power(m, lambda, n))};
    total += b.basis.size();
    out.blocks.push_back(std::move(b));
  }
  out.exhaustive = total == n;
  return out;
}

/// Common generalized eigenspace of commuting operators at the given eigenvalues.
inline Subspace joint_generalized_eigenspace(const std::vector<Matrix>& ops, const std::vector<Scalar>& values) {
  require(!ops.empty() && ops.size() == values.size(), ErrorKind::DimensionMismatch, "operators and values differ");
  const std::size_t n = ops.front().rows();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Matrix p = shifted_power(ops[i], values[i], n);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(p.row(r));
  }
  return Subspace::span(ops.front().field(), n, kernel_basis(Matrix::from_rows(ops.front().field(), rows, n)));
}

inline bool is_invariant(const Matrix& m, const std::vector<Vector>& basis) {
  if (basis.empty()) return true;
  const Subspace s = Subspace::span(m.field(), m.rows(), basis);
  for (const auto& v : basis)
    if (!s.contains(m * v)) return false;
  return true;
}

}  // namespace cocert
