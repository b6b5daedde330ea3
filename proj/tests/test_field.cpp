#include <gtest/gtest.h>

#include <random>

#include "cocert/field.hpp"

using namespace cocert;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int span = 7) {
  std::uniform_int_distribution<int> d(-span, span);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

Vector mul(const Matrix& a, const Vector& x) { return a * x; }

}  // namespace

TEST(Field, InverseExamples) {
  EXPECT_EQ(field_inv(Field(7).from_int(3)), Field(7).from_int(5));
  EXPECT_EQ(field_inv(Field(2).one()), Field(2).one());
  const Field q = Field::rationals();
  EXPECT_EQ(field_inv(q.from_rational(Rational(2, 3))), q.from_rational(Rational(3, 2)));
}

TEST(Field, InverseOfZeroThrows) {
  try {
    field_inv(Field(5).zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  EXPECT_THROW(field_inv(Field::rationals().zero()), Error);
}

TEST(Field, InverseByScanGF7) {
  const Field f(7);
  for (int a = 1; a < 7; ++a) {
    int found = 0;
    for (int b = 1; b < 7; ++b)
      if ((a * b) % 7 == 1) found = b;
    EXPECT_EQ(field_inv(f.from_int(a)), f.from_int(found));
  }
}

TEST(Field, CanonicalRepresentatives) {
  const Field f(5);
  EXPECT_EQ(f.from_int(-1), f.from_int(4));
  EXPECT_EQ(f.from_int(-1).str(), "4");
  const Field q = Field::rationals();
  EXPECT_EQ(q.from_rational(Rational(4) / Rational(-6)).to_rational(), Rational(-2, 3));
}

TEST(Field, MixingCharacteristicsIsAnError) {
  EXPECT_THROW(Field(2).one() + Field(3).one(), Error);
  EXPECT_THROW(Field(3).one() * Field::rationals().one(), Error);
  EXPECT_THROW(Field(4), Error);
}

TEST(Field, RandomInverseProperty) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5, 7, 101}) {
    const Field f(p);
    std::uniform_int_distribution<std::int64_t> d(1, static_cast<std::int64_t>(p) - 1);
    for (int t = 0; t < 1000; ++t) {
      const Scalar a = f.from_int(d(rng)), b = f.from_int(d(rng));
      EXPECT_EQ((a * b) * field_inv(b), a);
    }
  }
}

TEST(Field, SolveExamplesGF2) {
  const Field f(2);
  const Matrix a = Matrix::from_ints(f, {{1, 0}, {0, 0}});
  const auto s = solve_linear(a, {f.one(), f.zero()});
  ASSERT_TRUE(s.solvable());
  EXPECT_EQ(*s.solution, (Vector{f.one(), f.zero()}));
  ASSERT_EQ(s.kernel.size(), 1u);
  EXPECT_EQ(s.kernel[0], (Vector{f.zero(), f.one()}));

  const auto u = solve_linear(a, {f.zero(), f.one()});
  EXPECT_FALSE(u.solvable());
  ASSERT_TRUE(u.certificate.has_value());
  EXPECT_EQ(*u.certificate, (Vector{f.zero(), f.one()}));
}

TEST(Field, SolveGF7MatchesScan) {
  const Field f(7);
  const Matrix a = Matrix::from_ints(f, {{2, 1}, {1, 3}});
  const Vector b{f.one(), f.zero()};
  const auto s = solve_linear(a, b);
  ASSERT_TRUE(s.solvable());
  int hits = 0;
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y)
      if ((2 * x + y) % 7 == 1 && (x + 3 * y) % 7 == 0) {
        ++hits;
        EXPECT_EQ(*s.solution, (Vector{f.from_int(x), f.from_int(y)}));
      }
  EXPECT_EQ(hits, 1);
}

TEST(Field, SolveDimensionMismatch) {
  const Field f(3);
  try {
    solve_linear(Matrix(f, 2, 2), zero_vector(f, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Field, SolutionOrCertificateAlwaysVerified) {
  std::mt19937_64 rng(5);
  for (const Field f : {Field(2), Field(3), Field(101), Field::rationals()}) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const Matrix a = random_matrix(f, r, c, rng, 2);
      const Matrix bm = random_matrix(f, r, 1, rng, 2);
      const Vector b = bm.col(0);
      const auto s = solve_linear(a, b);
      ASSERT_NE(s.solution.has_value(), s.certificate.has_value());
      if (s.solution) {
        EXPECT_EQ(mul(a, *s.solution), b);
      } else {
        const Vector y = *s.certificate;
        EXPECT_TRUE(is_zero(mul(a.transpose(), y)));
        EXPECT_FALSE(dot(y, b).is_zero());
      }
      for (const auto& k : s.kernel) EXPECT_TRUE(is_zero(mul(a, k)));
    }
  }
}

TEST(Field, RankNullity) {
  std::mt19937_64 rng(9);
  for (const Field f : {Field(2), Field(5), Field::rationals()}) {
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      const Matrix a = random_matrix(f, r, c, rng, 1);
      const auto ker = kernel_basis(a);
      EXPECT_EQ(rank(a) + ker.size(), c);
      EXPECT_EQ(Subspace::span(f, c, ker).dim(), ker.size());
    }
  }
}

TEST(Field, InverseAndDeterminant) {
  std::mt19937_64 rng(3);
  const Field f = Field::rationals();
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_matrix(f, 4, 4, rng, 3);
    const auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), !determinant(a).is_zero());
    if (inv) {
      EXPECT_EQ(a * *inv, Matrix::identity(f, 4));
    }
  }
}

TEST(Field, SubspaceOperations) {
  const Field f(3);
  Subspace s(f, 3);
  EXPECT_TRUE(s.add({f.one(), f.one(), f.zero()}));
  EXPECT_FALSE(s.add({f.from_int(2), f.from_int(2), f.zero()}));
  EXPECT_TRUE(s.contains({f.from_int(2), f.from_int(2), f.zero()}));
  EXPECT_FALSE(s.contains(unit_vector(f, 3, 2)));
  EXPECT_TRUE(s.is_subspace_of(Subspace::whole(f, 3)));
}
