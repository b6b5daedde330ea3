#include <gtest/gtest.h>

#include <random>

#include "cocert/eigen.hpp"
#include "cocert/quotient.hpp"

using namespace cocert;

namespace {

const Field GF2(2);

LaurentPoly random_poly(const QuotientRing& R, std::mt19937_64& rng, int lo, int hi, int terms = 4) {
  std::uniform_int_distribution<int> e(lo, hi);
  std::uniform_int_distribution<int> c(-3, 3);
  LaurentPoly p(R.vars(), R.field());
  for (int t = 0; t < terms; ++t) {
    Exponent ex(R.vars().size());
    for (auto& x : ex) x = e(rng);
    p.add_term(ex, R.field().from_int(c(rng)));
  }
  return p;
}

Subspace kernel_of_frobenius(const std::string& rel) {
  return frobenius_kernel(*QuotientRing::create({"x"}, GF2, {rel}));
}

}  // namespace

TEST(Laurent, ArithmeticLaws) {
  const Field f(5);
  const std::vector<std::string> v{"x", "y"};
  const auto a = parse_laurent("x + 2*y^-1", v, f), b = parse_laurent("x^-2*y - 1", v, f),
             c = parse_laurent("3*x*y + y^2", v, f);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a - a).size(), 0u);
  EXPECT_EQ(parse_laurent("x*x^-1", v, f), parse_laurent("1", v, f));
}

TEST(Laurent, ParseErrorsCarryPosition) {
  try {
    parse_laurent("x + * y", {"x", "y"}, GF2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
  EXPECT_THROW(parse_laurent("z", {"x"}, GF2), Error);
}

TEST(Groebner, PrincipalIdealAlreadyReduced) {
  const auto gb = groebner_basis(Ideal::parse({"x"}, GF2, {"x^2+1"}));
  ASSERT_EQ(gb.polys.size(), 1u);
  EXPECT_EQ(gb.to_laurent()[0], parse_laurent("x^2+1", {"x"}, GF2));
}

TEST(Groebner, UnitIdeal) {
  for (const Field f : {Field(2), Field(7), Field::rationals()}) {
    const auto gb = groebner_basis(Ideal::parse({"x", "y"}, f, {"x*y-1", "x^2"}));
    EXPECT_TRUE(gb.is_unit_ideal());
  }
}

TEST(Groebner, BasisIsReducedAndClosed) {
  const Field f(3);
  const auto gb = groebner_basis(Ideal::parse({"x", "y", "z"}, f, {"x^2*y - z", "y^2 - x*z + 1", "x*y*z - 2"}));
  EXPECT_TRUE(s_pairs_reduce_to_zero(gb.polys, gb.order));
  EXPECT_TRUE(is_reduced_basis(gb.polys));
}

TEST(Groebner, BlowUpQuotientHasDim24) {
  const auto R = QuotientRing::create({"x", "y"}, GF2, {"x*(x+y)^2+1", "y^8+(x+y)^2"});
  EXPECT_EQ(R->dim(), 24u);
  EXPECT_TRUE(groebner_verified(*R));
}

TEST(Quotient, NormalFormExamples) {
  const Field q = Field::rationals();
  const auto R = QuotientRing::create({"x"}, q, {"x^4-1"});
  EXPECT_TRUE(R->element("x^4").is_one());
  EXPECT_TRUE(R->element("x^-1") == R->element("x^3"));
  for (long n = 1; n <= 8; ++n) {
    const auto P = QuotientRing::create({"x"}, GF2, {"x^" + std::to_string(n + 1) + "-1"});
    EXPECT_EQ(P->dim(), static_cast<std::size_t>(n + 1));
    EXPECT_TRUE(P->element("x^" + std::to_string(n + 1)).is_one());
  }
  const auto S = QuotientRing::create({"x"}, GF2, {"x^6+1"});
  EXPECT_TRUE(S->element("(x^3+1)^2").is_zero());
}

TEST(Quotient, VariableMismatch) {
  const auto R = QuotientRing::create({"x"}, GF2, {"x^2+1"});
  try {
    R->element(parse_laurent("y", {"y"}, GF2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VariableMismatch);
  }
}

TEST(Quotient, InfiniteDimensionalRejected) {
  try {
    QuotientRing::create({"x", "y"}, Field(3), {"x*y-1"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteDimensional);
  }
}

TEST(Quotient, MultiplicationMatrices) {
  const auto R = QuotientRing::create({"x"}, GF2, {"x^2+1"});
  EXPECT_EQ(R->element("1").multiplication_matrix(), Matrix::identity(GF2, 2));
  EXPECT_EQ(R->element("x").multiplication_matrix(), Matrix::from_ints(GF2, {{0, 1}, {1, 0}}));

  const Field f(5);
  const auto C = QuotientRing::create({"x"}, f, {"x^3-1"});
  const Matrix m = C->element("x").multiplication_matrix();
  EXPECT_EQ(m.pow(3), Matrix::identity(f, 3));
  for (std::size_t j = 0; j < 3; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < 3; ++i) ones += m(i, j).is_one() ? 1 : 0;
    EXPECT_EQ(ones, 1u);
  }
  EXPECT_NE(m, Matrix::identity(f, 3));
}

TEST(Quotient, Invertibility) {
  const auto A = QuotientRing::create_polynomial(Ideal::parse({"u"}, GF2, {"u^24+u^18+1"}));
  const auto inv = inverse_of(A->element("u"));
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE((*inv * A->element("u")).is_one());
  const auto B = QuotientRing::create({"x"}, GF2, {"x^4+1"});
  EXPECT_FALSE(is_invertible(B->element("x^2+1")));
  const auto one = inverse_of(B->element("1"));
  ASSERT_TRUE(one.has_value());
  EXPECT_TRUE(one->is_one());
}

TEST(Quotient, NormalFormIsHomomorphism) {
  std::mt19937_64 rng(2024);
  const std::vector<RingPtr> rings{
      QuotientRing::create({"x", "y"}, GF2, {"x*(x+y)^2+1", "y^8+(x+y)^2"}),
      QuotientRing::create({"x", "y"}, Field(7), {"1 - x^-2*y^-1", "1 - x^-1*y^-2"}),
      QuotientRing::create({"x"}, Field::rationals(), {"x^3 - 2*x + 1"}),
      QuotientRing::create_polynomial(Ideal::parse({"u"}, GF2, {"(u^12+u^9+1)^2"})),
  };
  for (const auto& R : rings) {
    const int lo = R->laurent() ? -3 : 0;
    for (int t = 0; t < 200; ++t) {
      const LaurentPoly f = random_poly(*R, rng, lo, 5), g = random_poly(*R, rng, lo, 5);
      const RingElement nf = R->element(f), ng = R->element(g);
      EXPECT_EQ(R->element(f + g), nf + ng);
      EXPECT_EQ(R->element(f * g), nf * ng);
      EXPECT_EQ(R->element(nf.lift()), nf);
    }
  }
}

TEST(Frobenius, KernelExamples) {
  EXPECT_EQ(kernel_of_frobenius("x^3+1").dim(), 0u);
  const auto R = QuotientRing::create({"x"}, GF2, {"x^4+1"});
  const Subspace k = frobenius_kernel(*R);
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE(ideal_equal(k, ideal_span({R->element("x^2+1")}), *R));
  const auto S = QuotientRing::create({"x"}, GF2, {"x^3+1"});
  EXPECT_TRUE(ideal_equal(frobenius_kernel(*S), Subspace(GF2, 3), *S));

  const auto V2 = QuotientRing::create_polynomial(Ideal::parse({"u"}, GF2, {"(u^12+u^9+1)^2"}));
  const Subspace kv = frobenius_kernel(*V2);
  EXPECT_EQ(kv.dim(), 12u);
  EXPECT_TRUE(ideal_equal(kv, ideal_span({V2->element("u^12+u^9+1")}), *V2));
  EXPECT_TRUE(square_is_zero(*V2, kv));
}

TEST(Frobenius, KernelOfProjectiveSpacesByParity) {
  for (long n = 1; n <= 16; ++n) {
    const Subspace k = kernel_of_frobenius("x^" + std::to_string(n + 1) + "+1");
    EXPECT_EQ(k.dim() == 0, n % 2 == 0) << n;
  }
}

TEST(Frobenius, RequiresCharacteristicTwo) {
  const auto R = QuotientRing::create({"x"}, Field(3), {"x^2-1"});
  try {
    frobenius_map(*R);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongCharacteristic);
  }
}

TEST(Frobenius, Multiplicative) {
  std::mt19937_64 rng(77);
  const auto R = QuotientRing::create({"x", "y"}, GF2, {"x*(x+y)^2+1", "y^8+(x+y)^2"});
  for (int t = 0; t < 100; ++t) {
    const RingElement f = R->element(random_poly(*R, rng, -2, 4)), g = R->element(random_poly(*R, rng, -2, 4));
    EXPECT_EQ(frobenius(f * g), frobenius(f) * frobenius(g));
  }
}

TEST(Frobenius, KernelSquaresToZeroForSquaredModuli) {
  for (const char* v : {"u+1", "u^3+1", "u^2+u+1", "u^5+u^2+1", "u^12+u^9+1"}) {
    const auto R = QuotientRing::create_polynomial(Ideal::parse({"u"}, GF2, {"(" + std::string(v) + ")^2"}));
    EXPECT_TRUE(square_is_zero(*R, frobenius_kernel(*R))) << v;
  }
}

TEST(Eigen, Examples) {
  const Field f(7);
  const auto id = generalized_eigendecomposition(Matrix::identity(f, 2));
  ASSERT_EQ(id.blocks.size(), 1u);
  EXPECT_TRUE(id.blocks[0].value.is_one());
  EXPECT_EQ(id.blocks[0].basis.size(), 2u);
  EXPECT_TRUE(id.exhaustive);

  const auto nil = generalized_eigendecomposition(Matrix::from_ints(f, {{0, 1}, {0, 0}}));
  ASSERT_EQ(nil.blocks.size(), 1u);
  EXPECT_TRUE(nil.blocks[0].value.is_zero());
  EXPECT_EQ(nil.blocks[0].basis.size(), 2u);

  const auto J = QuotientRing::create({"x", "y"}, f, {"1 - x^-2*y^-1", "1 - x^-1*y^-2"});
  const auto W = generalized_eigendecomposition(J->element("x + y + x^-1*y^-1").multiplication_matrix());
  EXPECT_TRUE(W.exhaustive);
  std::vector<std::int64_t> values;
  for (const auto& b : W.blocks) {
    EXPECT_EQ(b.basis.size(), 1u);
    for (std::int64_t v = 0; v < 7; ++v)
      if (b.value == f.from_int(v)) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  EXPECT_EQ(values, (std::vector<std::int64_t>{3, 5, 6}));
}

TEST(Eigen, NotExhaustiveOutsideGroundField) {
  const Field q = Field::rationals();
  const auto e = generalized_eigendecomposition(Matrix::from_ints(q, {{0, -1}, {1, 0}}));
  EXPECT_FALSE(e.exhaustive);
  EXPECT_TRUE(e.blocks.empty());
}

TEST(Eigen, SpacesAreInvariantAndIndependent) {
  std::mt19937_64 rng(8);
  const Field f(5);
  std::uniform_int_distribution<int> d(0, 4);
  for (int t = 0; t < 40; ++t) {
    Matrix m(f, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = f.from_int(d(rng));
    const auto e = generalized_eigendecomposition(m);
    Subspace all(f, 4);
    std::size_t total = 0;
    for (const auto& b : e.blocks) {
      EXPECT_TRUE(is_invariant(m, b.basis));
      for (const auto& v : b.basis) all.add(v);
      total += b.basis.size();
    }
    EXPECT_EQ(all.dim(), total);
    EXPECT_EQ(e.exhaustive, total == 4);
  }
}

TEST(Eigen, CharacteristicPolynomial) {
  const Field q = Field::rationals();
  const Matrix m = Matrix::from_ints(q, {{2, 1, 0}, {0, 2, 0}, {1, 0, 3}});
  const UniPoly cp = characteristic_polynomial(m);
  EXPECT_EQ(cp, UniPoly::from_ints(q, {-12, 16, -7, 1}));
}
