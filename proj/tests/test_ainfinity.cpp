#include <gtest/gtest.h>

#include <random>

#include "cocert/ainfinity.hpp"
#include "cocert/quotient.hpp"

using namespace cocert;

namespace {

const Field GF2(2);

AInfAlgebra matrix_algebra(const Field& f) {
  // e_ij e_kl = delta_jk e_il, basis order e11 e12 e21 e22
  AInfAlgebra A(f, {{"e11", 0}, {"e12", 0}, {"e21", 0}, {"e22", 0}}, true);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = a / 2, j = a % 2, k = b / 2, l = b % 2;
      A.set_mu({a, b}, j == k ? unit_vector(f, 4, i * 2 + l) : zero_vector(f, 4));
    }
  A.set_unit(unit_vector(f, 4, 0) + unit_vector(f, 4, 3));
  return A;
}

// mu^2(a, b) = (-1)^{|b|} a b, the sign convention under which a graded
// associative algebra satisfies the signed relations.
AInfAlgebra twisted_clifford(const Matrix& H) {
  const CliffordPresentation C(H);
  std::vector<BasisElement> b;
  for (std::size_t m = 0; m < C.dim(); ++m) b.push_back({CliffordPresentation::name(m), __builtin_popcountll(m)});
  AInfAlgebra A = AInfAlgebra::from_product(C.field(), b, [&](std::size_t s, std::size_t t) {
    const Vector v = C.multiply_basis(s, t);
    return __builtin_popcountll(t) % 2 ? zero_vector(C.field(), C.dim()) - v : v;
  });
  return A;
}

AInfAlgebra circle_ring() {
  return AInfAlgebra::from_ring(*QuotientRing::create({"u"}, GF2, {"u^2+1"}));
}

HochschildCochain random_cochain(const AInfAlgebra& A, std::size_t len, int parity, std::mt19937_64& rng) {
  HochschildCochain h = HochschildCochain::zero(A.field(), A.dim(), len, parity);
  std::uniform_int_distribution<int> d(-2, 2);
  const std::size_t n = A.dim();
  for (std::size_t k = 0; k < h.comps.size(); ++k)
    for (std::size_t c = 0; c < ipow(n, k); ++c) {
      const auto in = detail::decode_tuple(c, n, k);
      for (std::size_t o = 0; o < n; ++o)
        if (homogeneous_slot(A, in, o, parity)) h.comps[k][c * n + o] = A.field().from_int(d(rng));
    }
  return h;
}

Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(f.characteristic()) - 1);
  Vector v(n);
  for (auto& x : v) x = f.from_int(d(rng));
  return v;
}

// All a in F^d: does mu2(a,y)+mu2(y,a) = c(y) target hold for every y?
bool star_by_enumeration(const AInfAlgebra& A, const std::vector<Vector>& ys, const std::vector<Scalar>& c,
                         const Vector& target) {
  const std::size_t d = A.dim();
  const std::uint64_t p = A.field().characteristic();
  std::vector<std::vector<Vector>> img(d);
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& y : ys) img[i].push_back(A.product(A.basis_vector(i), y) + A.product(y, A.basis_vector(i)));
  std::vector<std::uint64_t> digit(d, 0);
  std::vector<Vector> acc(ys.size(), zero_vector(A.field(), d));
  while (true) {
    bool ok = true;
    for (std::size_t s = 0; s < ys.size() && ok; ++s) ok = acc[s] == c[s] * target;
    if (ok) return true;
    std::size_t i = 0;
    while (i < d && digit[i] == p - 1) {
      for (std::size_t s = 0; s < ys.size(); ++s)
        acc[s] = acc[s] - A.field().from_int(static_cast<std::int64_t>(p - 1)) * img[i][s];
      digit[i] = 0;
      ++i;
    }
    if (i == d) return false;
    ++digit[i];
    for (std::size_t s = 0; s < ys.size(); ++s) acc[s] = acc[s] + img[i][s];
  }
}

}  // namespace

TEST(Relations, AssociativeAlgebrasPass) {
  EXPECT_TRUE(check_ainf_relations(matrix_algebra(Field::rationals()), 3).ok);
  EXPECT_TRUE(check_ainf_relations(circle_ring(), 3).ok);
  EXPECT_TRUE(check_ainf_relations(twisted_clifford(Matrix::from_ints(Field(5), {{1, 2}, {2, 0}})), 3).ok);
  EXPECT_FALSE(check_ainf_relations(CliffordPresentation(Matrix::from_ints(Field(5), {{1, 2}, {2, 0}})).algebra(), 3).ok);
}

TEST(Relations, PerturbationIsWitnessed) {
  AInfAlgebra A = matrix_algebra(Field(3));
  A.set_mu({1, 2}, unit_vector(Field(3), 4, 1));
  const RelationCheck r = check_ainf_relations(A, 3);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.arity, 3u);
  EXPECT_EQ(r.inputs.size(), 3u);
  EXPECT_FALSE(is_zero(r.value));
}

TEST(Relations, CircleModelsAsData) {
  EXPECT_TRUE(check_ainf_relations(circle_model('a'), 4).ok);
  const RelationCheck b = check_ainf_relations(circle_model('b'), 4);
  EXPECT_FALSE(b.ok);
  EXPECT_EQ(b.arity, 4u);
  EXPECT_TRUE(check_ainf_relations(circle_model('b'), 3).ok);
}

TEST(Differential, SquaresToZero) {
  std::mt19937_64 rng(1);
  const std::vector<AInfAlgebra> algebras{
      circle_ring(),
      circle_model('a'),
      matrix_algebra(Field::rationals()),
      twisted_clifford(Matrix::from_ints(Field::rationals(), {{2, 1}, {1, 0}})),
  };
  for (const auto& A : algebras) {
    for (int t = 0; t < 100; ++t) {
      const int parity = t % 2;
      const HochschildCochain h = random_cochain(A, 2, parity, rng);
      const HochschildCochain dh = hochschild_differential(A, h, 2);
      EXPECT_EQ(dh.parity, (parity + 1) % 2);
      EXPECT_TRUE(hochschild_differential(A, dh, 2).is_zero());
    }
  }
}

TEST(Differential, LiteralSignsBreakSquareZero) {
  std::mt19937_64 rng(4);
  const AInfAlgebra A = matrix_algebra(Field::rationals());
  bool broken = false;
  for (int t = 0; t < 10 && !broken; ++t) {
    const HochschildCochain h = random_cochain(A, 2, 0, rng);
    const auto dh = hochschild_differential(A, h, 2, SignRule::Literal);
    broken = !hochschild_differential(A, dh, 2, SignRule::Literal).is_zero();
  }
  EXPECT_TRUE(broken);
}

TEST(Differential, Examples) {
  const AInfAlgebra A = circle_ring();
  HochschildCochain h = HochschildCochain::zero(GF2, 2, 1, 0);
  h.set(2, {}, unit_vector(GF2, 2, 1));
  EXPECT_TRUE(hochschild_differential(A, h, 1).is_zero());

  // h0 = e12 in M2: (dh)^1(a) = a e12 - e12 a up to sign, nonzero on e11
  const AInfAlgebra M = matrix_algebra(Field::rationals());
  HochschildCochain g = HochschildCochain::zero(M.field(), 4, 1, 0);
  g.set(4, {}, unit_vector(M.field(), 4, 1));
  const auto dg = hochschild_differential(M, g, 1);
  const Vector v = dg.value(4, {0});
  const Vector comm = M.product(M.basis_vector(0), M.basis_vector(1)) - M.product(M.basis_vector(1), M.basis_vector(0));
  EXPECT_TRUE(v == comm || v == zero_vector(M.field(), 4) - comm);
}

TEST(Coboundary, CircleCochainIsNotACoboundary) {
  const AInfAlgebra A = circle_ring();
  HochschildCochain h = HochschildCochain::zero(GF2, 2, 1, 0);
  h.set(2, {1}, unit_vector(GF2, 2, 0));
  const auto r = is_coboundary_through_length(A, h, 1);
  EXPECT_FALSE(r.is_coboundary);
  EXPECT_TRUE(r.certificate.has_value());
}

TEST(Coboundary, UnitIsNotACoboundary) {
  for (char cfg : {'a', 'b'}) {
    const AInfAlgebra A = circle_model(cfg);
    EXPECT_FALSE(is_coboundary_through_length(A, unit_cochain(A, 1), 1).is_coboundary);
  }
}

TEST(Coboundary, RoundTrip) {
  std::mt19937_64 rng(12);
  for (const auto& A : {circle_ring(), matrix_algebra(Field(5)), circle_model('a')}) {
    for (int t = 0; t < 10; ++t) {
      const HochschildCochain g = random_cochain(A, 2, 1, rng);
      const HochschildCochain h = hochschild_differential(A, g, 2);
      const auto r = is_coboundary_through_length(A, h, 2);
      ASSERT_TRUE(r.is_coboundary);
      ASSERT_TRUE(r.primitive.has_value());
      const auto back = hochschild_differential(A, *r.primitive, 2);
      for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(back.comps[k], h.comps[k]);
    }
  }
}

TEST(Coboundary, LengthGuard) {
  const AInfAlgebra A = circle_ring();
  try {
    is_coboundary_through_length(A, HochschildCochain::zero(GF2, 2, 3, 0), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CostGuardExceeded);
  }
}

TEST(Star, Examples) {
  const AInfAlgebra A = circle_ring();
  const Vector u = A.basis_vector(1), one = A.basis_vector(0);
  EXPECT_FALSE(equation_star_solver(A, {u}, {GF2.one()}, one).solvable());
  const auto zero = equation_star_solver(A, {u}, {GF2.zero()}, one);
  ASSERT_TRUE(zero.solvable());

  const Field f(7);
  const CliffordPresentation C(Matrix::from_ints(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  const AInfAlgebra B = C.algebra();
  std::vector<Vector> ys;
  for (std::size_t q = 0; q < 3; ++q) ys.push_back(B.basis_vector(std::size_t{1} << q));
  EXPECT_FALSE(equation_star_solver(B, ys, {f.zero(), f.zero(), f.one()}, *B.unit()).solvable());
  EXPECT_TRUE(equation_star_solver(B, ys, {f.one(), f.zero(), f.zero()}, *B.unit()).solvable());
}

TEST(Star, AgreesWithEnumeration) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    const Field f = t % 2 ? Field(3) : GF2;
    const std::size_t d = 1 + rng() % (f.characteristic() == 2 ? 16 : 8);
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back({"b" + std::to_string(i), 0});
    std::bernoulli_distribution sparse(0.15);
    AInfAlgebra A(f, basis, false);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vector v = zero_vector(f, d);
        if (sparse(rng)) v = random_vector(f, d, rng);
        A.set_mu({i, j}, v);
      }
    const std::size_t ny = 1 + rng() % 2;
    std::vector<Vector> ys;
    std::vector<Scalar> c;
    for (std::size_t s = 0; s < ny; ++s) {
      ys.push_back(random_vector(f, d, rng));
      c.push_back(random_vector(f, 1, rng)[0]);
    }
    Vector target = random_vector(f, d, rng);
    if (t % 4 < 2) {
      const Vector a0 = random_vector(f, d, rng);
      c.assign(ny, f.zero());
      c[0] = f.one();
      target = A.product(a0, ys[0]) + A.product(ys[0], a0);
      for (std::size_t s = 1; s < ny; ++s) {
        const Vector w = A.product(a0, ys[s]) + A.product(ys[s], a0);
        if (!is_zero(w)) ys[s] = ys[0];
        c[s] = is_zero(w) ? f.zero() : f.one();
      }
    }
    const StarResult r = equation_star_solver(A, ys, c, target);
    EXPECT_EQ(r.solvable(), star_by_enumeration(A, ys, c, target)) << "trial " << t;
    if (r.solvable()) {
      for (std::size_t s = 0; s < ny; ++s)
        EXPECT_EQ(A.product(*r.solution, ys[s]) + A.product(ys[s], *r.solution), c[s] * target);
    }
  }
}

TEST(CoCochain, Components) {
  const AInfAlgebra A = circle_model('a');
  const Vector lstar{GF2.zero(), GF2.one()};
  const HochschildCochain h = build_co_cochain(A, lstar, GF2.one(), 3);
  EXPECT_EQ(h.value(2, {}), *A.unit());
  EXPECT_EQ(h.value(2, {1}), *A.unit());
  EXPECT_EQ(h.value(2, {1, 1, 1}), *A.unit());
  EXPECT_TRUE(is_zero(h.value(2, {0})));
  EXPECT_TRUE(is_zero(h.value(2, {0, 1})));

  const HochschildCochain z = build_co_cochain(A, zero_vector(GF2, 2), GF2.one(), 3);
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& s : z.comps[k]) EXPECT_TRUE(s.is_zero());
}

TEST(CoCochain, NonzeroFunctionalGivesNonCoboundary) {
  for (char cfg : {'a', 'b'}) {
    const AInfAlgebra A = circle_model(cfg);
    const HochschildCochain h = build_co_cochain(A, {GF2.zero(), GF2.one()}, GF2.one(), 1);
    EXPECT_FALSE(is_coboundary_through_length(A, h, 1, {unit_cochain(A, 1)}).is_coboundary);
  }
}

TEST(Circle, StructureConstants) {
  const AInfAlgebra a = circle_model('a'), b = circle_model('b');
  const Vector one = a.basis_vector(0), u = a.basis_vector(1);
  EXPECT_EQ(a.mu_basis({1, 1, 1}), one);
  EXPECT_TRUE(is_zero(a.mu_basis({1, 0, 1})));
  EXPECT_EQ(b.mu_basis({1, 0, 1}), u);
  EXPECT_EQ(b.mu_basis({0, 1, 1}), u);
  const Vector x = one + u;
  EXPECT_TRUE(is_zero(a.product(x, x)));
  EXPECT_TRUE(is_zero(b.product(x, x)));
  EXPECT_THROW(circle_model('c'), Error);
}

TEST(Massey, CircleConfigurations) {
  const AInfAlgebra a = circle_model('a'), b = circle_model('b');
  const Vector one = a.basis_vector(0), u = a.basis_vector(1), x = one + u;
  const MasseyResult ma = massey_triple(a, x), mb = massey_triple(b, x);
  EXPECT_EQ(ma.value, one);
  EXPECT_TRUE(ma.nontrivial);
  EXPECT_TRUE(mb.value == one || mb.value == u);
  EXPECT_TRUE(mb.nontrivial);
  EXPECT_EQ(mb.value, one);
  EXPECT_EQ(ma.indeterminacy.dim(), 1u);
  EXPECT_TRUE(ma.indeterminacy.contains(x));
  EXPECT_TRUE(ma.indeterminacy.contains(ma.value - mb.value));
  EXPECT_TRUE(ma.indeterminacy.contains(u - one));

  const MasseyResult z = massey_triple(a, zero_vector(GF2, 2));
  EXPECT_TRUE(is_zero(z.value));
  EXPECT_FALSE(z.nontrivial);
  try {
    massey_triple(a, one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ObstructedMassey);
  }
}

TEST(Clifford, Presentations) {
  const Field f = Field::rationals();
  const CliffordPresentation ext(Matrix(f, 3, 3));
  EXPECT_EQ(ext.dim(), 8u);
  EXPECT_TRUE(ext.relations_consistent());
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q) {
      const Vector ypq = ext.multiply_basis(std::size_t{1} << p, std::size_t{1} << q);
      const Vector yqp = ext.multiply_basis(std::size_t{1} << q, std::size_t{1} << p);
      EXPECT_TRUE(is_zero(ypq + yqp));
    }

  const CliffordPresentation D(Matrix::from_ints(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  EXPECT_TRUE(D.relations_consistent());
  const std::size_t yn = 4;
  for (std::size_t m = 0; m < D.dim(); ++m) {
    if (__builtin_popcountll(m) % 2 == 0) continue;
    EXPECT_TRUE(is_zero(D.multiply_basis(yn, m) + D.multiply_basis(m, yn))) << m;
  }

  const CliffordPresentation one(Matrix::from_ints(f, {{3}}));
  const Vector y2 = one.multiply_basis(1, 1);
  EXPECT_EQ(y2[0], f.from_rational(Rational(3, 2)));
  EXPECT_TRUE(y2[1].is_zero());

  const CliffordPresentation g(Matrix::from_ints(Field(5), {{1, 3, 0}, {3, 2, 4}, {0, 4, 1}}));
  EXPECT_TRUE(g.relations_consistent());
}

TEST(Clifford, Errors) {
  try {
    clifford_from_hessian(Matrix::identity(GF2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongCharacteristic);
  }
  EXPECT_THROW(clifford_from_hessian(Matrix::from_ints(Field(3), {{0, 1}, {0, 0}})), Error);
}
