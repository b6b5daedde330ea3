#pragma once

// Exact scalars over GF(p) and QQ, dense matrices and subspaces.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cocert/error.hpp"

namespace cocert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 64-bit; p < 2^32
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) fail(ErrorKind::DivisionByZero, "element has no inverse modulo " + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace detail

class Field;

/// An element of GF(p) (p prime) or of QQ (characteristic 0).
///
/// GF(p) residues are kept in [0, p). Rationals are canonical by
/// construction of cpp_rational (reduced, positive denominator); a null
/// pointer stands for rational zero so that GF(p) values carry no heap state.
class Scalar {
 public:
  Scalar() = default;

  static Scalar gf(std::uint64_t p, std::int64_t v) {
    Scalar s;
    s.p_ = p;
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    s.v_ = static_cast<std::uint64_t>(r);
    return s;
  }

  static Scalar gf_residue(std::uint64_t p, std::uint64_t r) {
    Scalar s;
    s.p_ = p;
    s.v_ = r;
    return s;
  }

  static Scalar rational(const Rational& q) {
    Scalar s;
    if (q != 0) s.q_ = std::make_shared<const Rational>(q);
    return s;
  }

  std::uint64_t characteristic() const { return p_; }
  Field field() const;

  bool is_zero() const { return p_ ? v_ == 0 : !q_; }
  bool is_one() const { return p_ ? v_ == 1 % p_ : (q_ && *q_ == 1); }

  std::uint64_t residue() const {
    require(p_ != 0, ErrorKind::WrongCharacteristic, "residue() on a rational scalar");
    return v_;
  }

  Rational to_rational() const {
    require(p_ == 0, ErrorKind::WrongCharacteristic, "to_rational() on a GF(p) scalar");
    return q_ ? *q_ : Rational(0);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.p_) return gf_residue(a.p_, (a.v_ + b.v_) % a.p_);
    if (!a.q_) return b;
    if (!b.q_) return a;
    return rational(*a.q_ + *b.q_);
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.p_) return gf_residue(a.p_, (a.v_ + a.p_ - b.v_) % a.p_);
    if (!b.q_) return a;
    return rational(a.to_rational() - *b.q_);
  }

  Scalar operator-() const {
    if (p_) return gf_residue(p_, (p_ - v_) % p_);
    if (!q_) return *this;
    return rational(-*q_);
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.p_) return gf_residue(a.p_, a.v_ * b.v_ % a.p_);
    if (!a.q_ || !b.q_) return Scalar();
    return rational(*a.q_ * *b.q_);
  }

  Scalar inv() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (p_) return gf_residue(p_, detail::mod_inv(v_, p_));
    return rational(1 / *q_);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    if (p_) return gf_residue(p_, detail::mod_pow(v_, static_cast<std::uint64_t>(e), p_));
    Scalar r = rational(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    if (a.p_) return a.v_ == b.v_;
    if (!a.q_ || !b.q_) return !a.q_ && !b.q_;
    return *a.q_ == *b.q_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical sorting (not field structure).
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    if (a.p_) return a.v_ < b.v_;
    return a.to_rational() < b.to_rational();
  }

  std::string str() const {
    if (p_) return std::to_string(v_);
    std::ostringstream os;
    os << to_rational();
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  void check_same(const Scalar& o) const {
    if (p_ != o.p_)
      fail(ErrorKind::CharacteristicMismatch,
           "mixing characteristic " + std::to_string(p_) + " with " + std::to_string(o.p_));
  }

  std::uint64_t p_ = 0;
  std::uint64_t v_ = 0;
  std::shared_ptr<const Rational> q_;
};

/// The coefficient field: GF(p) for a prime p < 2^32, or QQ when p = 0.
class Field {
 public:
  Field() = default;
  explicit Field(std::uint64_t p) : p_(p) {
    require(p == 0 || (detail::is_prime(p) && p < (1ULL << 32)), ErrorKind::InvalidArgument,
            "characteristic must be 0 or a prime below 2^32, got " + std::to_string(p));
  }

  static Field rationals() { return Field(0); }
  static Field gf(std::uint64_t p) { return Field(p); }

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const { return p_ ? Scalar::gf_residue(p_, 0) : Scalar(); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t v) const {
    return p_ ? Scalar::gf(p_, v) : Scalar::rational(Rational(v));
  }
  Scalar from_bigint(const BigInt& v) const {
    if (!p_) return Scalar::rational(Rational(v));
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return Scalar::gf_residue(p_, static_cast<std::uint64_t>(r));
  }
  Scalar from_rational(const Rational& q) const {
    if (!p_) return Scalar::rational(q);
    return from_bigint(boost::multiprecision::numerator(q)) /
           from_bigint(boost::multiprecision::denominator(q));
  }

  std::string name() const { return p_ ? "GF(" + std::to_string(p_) + ")" : "QQ"; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  std::uint64_t p_ = 0;
};

inline Field Scalar::field() const { return Field(p_); }

/// Multiplicative inverse; throws DivisionByZero on 0.
inline Scalar field_inv(const Scalar& a) { return a.inv(); }

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

inline Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = f.one();
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector operator+(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector sizes differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector sizes differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator*(const Scalar& c, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Scalar dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector sizes differ");
  Scalar s = a.empty() ? Scalar() : a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows[0].size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == c, ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(Field f, const std::vector<Vector>& cols, std::size_t rows = 0) {
    if (!cols.empty()) rows = cols[0].size();
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == rows, ErrorKind::DimensionMismatch, "ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vector operator*(const Matrix& a, const Vector& x) {
    require(a.cols_ == x.size(), ErrorKind::DimensionMismatch, "matrix-vector shape");
    Vector r = zero_vector(a.field_, a.rows_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < a.rows_; ++i)
        if (!a(i, j).is_zero()) r[i] += a(i, j) * x[j];
    }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch, "matrix sum shape");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch, "matrix difference shape");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  friend Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  Matrix pow(std::size_t e) const {
    require(is_square(), ErrorKind::DimensionMismatch, "power of non-square matrix");
    Matrix r = identity(field_, rows_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << "]\n";
    }
    return os.str();
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column of row i, rows beyond are zero
};

namespace detail {

inline Echelon rref_modp(const Matrix& m) {
  const std::uint64_t p = m.field().characteristic();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m(i, j).residue();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t sel = R;
    for (std::size_t i = r; i < R; ++i)
      if (a[i * C + c]) {
        sel = i;
        break;
      }
    if (sel == R) continue;
    if (sel != r)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(sel * C),
                       a.begin() + static_cast<std::ptrdiff_t>((sel + 1) * C),
                       a.begin() + static_cast<std::ptrdiff_t>(r * C));
    std::uint64_t* pr = &a[r * C];
    const std::uint64_t inv = mod_inv(pr[c], p);
    for (std::size_t j = c; j < C; ++j) pr[j] = pr[j] * inv % p;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint64_t* pi = &a[i * C];
      const std::uint64_t f = pi[c];
      if (!f) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < C; ++j)
        if (pr[j]) pi[j] = (pi[j] + nf * pr[j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m.field(), R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = Scalar::gf_residue(p, a[i * C + j]);
  return {std::move(out), std::move(pivots)};
}

inline Echelon rref_generic(Matrix a) {
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t sel = R;
    for (std::size_t i = r; i < R; ++i)
      if (!a(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == R) continue;
    if (sel != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a(sel, j), a(r, j));
    const Scalar inv = a(r, c).inv();
    for (std::size_t j = c; j < C; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace detail

/// Gauss-Jordan elimination, first nonzero entry as pivot.
inline Echelon row_echelon(const Matrix& m) {
  if (m.field().characteristic() != 0) return detail::rref_modp(m);
  return detail::rref_generic(m);
}

inline std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = row_echelon(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Result of solve_linear: either a particular solution or a certificate
/// y with y^T A = 0 and y^T b != 0. The kernel basis is always filled.
struct LinearSolution {
  std::optional<Vector> solution;
  std::vector<Vector> kernel;
  std::optional<Vector> certificate;

  bool solvable() const { return solution.has_value(); }
};

inline LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  require(b.size() == a.rows(), ErrorKind::DimensionMismatch,
          "rhs has " + std::to_string(b.size()) + " entries, matrix has " + std::to_string(a.rows()) + " rows");
  const Field& f = a.field();
  const std::size_t m = a.rows(), n = a.cols();
  // [A | b | I]: rows reduced to zero in the A|b part keep their combination in the I part
  Matrix aug(f, m, n + 1 + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
    aug(i, n + 1 + i) = f.one();
  }
  const Echelon e = row_echelon(aug);
  LinearSolution out;
  out.kernel = kernel_basis(a);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == n) {
      Vector y(m);
      for (std::size_t k = 0; k < m; ++k) y[k] = e.rref(i, n + 1 + k);
      out.certificate = std::move(y);
      return out;
    }
  }
  Vector x = zero_vector(f, n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    if (e.pivots[i] < n) x[e.pivots[i]] = e.rref(i, n);
  out.solution = std::move(x);
  return out;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  require(m.is_square(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const Echelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

inline Scalar determinant(Matrix a) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  Scalar det = a.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return a.field().zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// A linear subspace of k^n kept as fully reduced echelon rows.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& gens) {
    Subspace s(f, ambient);
    for (const auto& g : gens) s.add(g);
    return s;
  }

  static Subspace whole(Field f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.add(unit_vector(f, ambient, i));
    return s;
  }

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }

  /// Remainder of v after clearing every pivot position.
  Vector reduce(Vector v) const {
    require(v.size() == ambient_, ErrorKind::DimensionMismatch, "vector not in ambient space");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Adds v; returns true when the dimension grew.
  bool add(const Vector& v) {
    Vector r = reduce(v);
    std::size_t piv = 0;
    while (piv < ambient_ && r[piv].is_zero()) ++piv;
    if (piv == ambient_) return false;
    const Scalar inv = r[piv].inv();
    for (std::size_t j = piv; j < ambient_; ++j) r[j] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = rows_[i][piv];
      if (c.is_zero()) continue;
      for (std::size_t j = piv; j < ambient_; ++j)
        if (!r[j].is_zero()) rows_[i][j] -= c * r[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  bool is_subspace_of(const Subspace& o) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const Vector& v) { return o.contains(v); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.is_subspace_of(b);
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cocert
