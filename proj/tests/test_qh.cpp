#include <gtest/gtest.h>

#include <random>

#include "cocert/qh.hpp"

using namespace cocert;

namespace {

ToricInstance picard2(long n, long k, std::vector<long> a) {
  ToricInstance i;
  i.n = n;
  i.k = k;
  i.a = std::move(a);
  return i;
}

ToricInstance cpn(long n) {
  ToricInstance i;
  i.family = "CPn";
  i.n = n;
  return i;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

bool has_status(const Verdict& v, const std::string& status) {
  return std::any_of(v.trace.begin(), v.trace.end(), [&](const TraceEntry& t) { return t.status == status; });
}

}  // namespace

TEST(Projective, Presentations) {
  const auto p1 = qh_projective(1);
  EXPECT_EQ(p1.ring->dim(), 2u);
  EXPECT_TRUE(p1.ring->element("x^2").is_one());
  const auto p3 = qh_projective(3);
  EXPECT_TRUE(p3.ring->element("(x^2+1)^2").is_zero());
  const auto p2 = qh_projective(2);
  EXPECT_EQ(p2.ring->dim(), 3u);
  EXPECT_EQ(frobenius_kernel(*p2.ring).dim(), 0u);
}

TEST(Projective, SeidelElements) {
  for (long n : {1, 3, 5, 7}) {
    const auto qh = qh_projective(n);
    const RingElement s = seidel_projective(qh, n);
    EXPECT_EQ(s, qh.ring->element("x^" + std::to_string((n + 1) / 2)));
    EXPECT_TRUE(s.pow(2).is_one());
  }
  EXPECT_EQ(kind_of([] { seidel_projective(qh_projective(4), 4); }), ErrorKind::HypothesisViolation);
}

TEST(Projective, KernelIsSeidelIdealForOddN) {
  for (long p = 1; p <= 8; ++p) {
    const long n = 2 * p - 1;
    const auto qh = qh_projective(n);
    const Subspace ker = frobenius_kernel(*qh.ring);
    EXPECT_EQ(ker.dim(), static_cast<std::size_t>(p));
    EXPECT_TRUE(ideal_equal(ker, ideal_span({qh.ring->element("x^" + std::to_string(p) + "+1")}), *qh.ring));
    EXPECT_TRUE(square_is_zero(*qh.ring, ker));
  }
}

TEST(Projective, ParityTable) {
  for (long n = 1; n <= 16; ++n) {
    const Verdict v = verdict_real_lagrangian(cpn(n));
    EXPECT_EQ(v.co0_injective, n % 2 == 0) << n;
    EXPECT_TRUE(v.costar_injective) << n;
    EXPECT_TRUE(v.split_generates) << n;
    EXPECT_EQ(v.qh_dim, static_cast<std::size_t>(n + 1));
    EXPECT_FALSE(has_status(v, "failed")) << n;
  }
}

TEST(Projective, Co0Real) {
  const auto qh = qh_projective(3);
  EXPECT_EQ(co0_real(qh.ring->element("x")), qh.ring->element("x^2"));
  EXPECT_TRUE(co0_real(qh.ring->element("x^2+1")).is_zero());
  EXPECT_TRUE(co0_real(qh.ring->element("1")).is_one());
}

TEST(Picard2, InstanceValidation) {
  EXPECT_EQ(picard2(9, 2, {1, 1}).minimal_chern(), 3);
  EXPECT_EQ(kind_of([] { picard2(5, 1, {4}).validate(); }), ErrorKind::NotFano);
  EXPECT_EQ(kind_of([] { picard2(5, 1, {-1}).validate(); }), ErrorKind::NotFano);
  EXPECT_EQ(kind_of([] { picard2(5, 2, {1}).validate(); }), ErrorKind::DimensionMismatch);
  ToricInstance odd = picard2(9, 2, {1, 1});
  odd.characteristic = 3;
  EXPECT_EQ(kind_of([&] { odd.validate(); }), ErrorKind::WrongCharacteristic);
}

TEST(Picard2, DimensionsAreBettiSums) {
  EXPECT_EQ(qh_picard2(picard2(9, 2, {1, 1})).ring->dim(), 24u);
  EXPECT_EQ(qh_picard2(picard2(3, 1, {0})).ring->dim(), 6u);
  EXPECT_EQ(qh_picard2(picard2(6, 2, {1, 1})).ring->dim(), 15u);
  EXPECT_EQ(qh_picard2(picard2(5, 1, {1})).ring->dim(), 10u);
}

TEST(Picard2, FlagshipSeidelAndKernel) {
  const ToricInstance inst = picard2(9, 2, {1, 1});
  const auto qh = qh_picard2(inst);
  const RingElement s = seidel_picard2(qh, inst);
  EXPECT_EQ(s, qh.ring->element("(x+y)*y^-4"));
  EXPECT_TRUE(s.pow(2).is_one());
  const Subspace ker = frobenius_kernel(*qh.ring);
  EXPECT_EQ(ker.dim(), 12u);
  const RingElement gen = qh.ring->element("y^4*(x+y)^-1+1");
  EXPECT_TRUE(ideal_equal(ker, ideal_span({gen}), *qh.ring));
  EXPECT_EQ(gen, s + qh.ring->element("1"));
  EXPECT_TRUE(square_is_zero(*qh.ring, ker));
}

TEST(Picard2, EvenCaseHypothesisReport) {
  const auto bad = even_case_violations(picard2(5, 1, {1}));
  EXPECT_NE(std::find(bad.begin(), bad.end(), "k is odd"), bad.end());
  EXPECT_NE(std::find(bad.begin(), bad.end(), "n-k+1 is odd"), bad.end());
  EXPECT_TRUE(even_case_violations(picard2(9, 2, {1, 1})).empty());
  EXPECT_EQ(kind_of([] { even_case_params(picard2(9, 2, {1, 3})); }), ErrorKind::HypothesisViolation);
  const auto qh = qh_picard2(picard2(5, 1, {1}));
  EXPECT_EQ(kind_of([&] { seidel_picard2(qh, picard2(5, 1, {1})); }), ErrorKind::HypothesisViolation);
}

TEST(Phi, FlagshipIsomorphism) {
  const ToricInstance inst = picard2(9, 2, {1, 1});
  const PhiIso phi = build_phi(inst);
  EXPECT_EQ(phi.g, 1);
  EXPECT_EQ(phi.V, UniPoly::sparse(Field(2), {0, 9, 12}));
  const auto [ys, xs] = phi_identities(phi, inst);
  EXPECT_TRUE(ys);
  EXPECT_TRUE(xs);

  const std::size_t d = phi.source->dim();
  const Field f(2);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector e = unit_vector(f, d, i);
    EXPECT_EQ(phi.unapply(phi.apply(e)), e);
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ej = unit_vector(f, d, j);
      EXPECT_EQ(phi.apply(phi.source->multiply(e, ej)),
                phi.target.ring->multiply(phi.apply(e), phi.apply(ej)));
    }
  }
}

TEST(Phi, SeidelPlusOneIsUnitTimesV) {
  const ToricInstance inst = picard2(9, 2, {1, 1});
  const PhiIso phi = build_phi(inst);
  const auto& R = phi.target.ring;
  const auto c = divide_by_V(phi, seidel_picard2(phi.target, inst) + R->element("1"));
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_invertible(*c));
  const RingPtr& A = phi.source;
  const RingElement V = A->element("u^12+u^9+1");
  EXPECT_TRUE(((*c * A->element("u^12") - A->element("1")) * V).is_zero());
}

TEST(Phi, SecondEvenInstance) {
  const ToricInstance inst = picard2(17, 4, {1, 1, 1, 1});
  const PhiIso phi = build_phi(inst);
  EXPECT_EQ(phi.V, UniPoly::sparse(Field(2), {0, 30, 35}));
  EXPECT_EQ(phi.source->dim(), 70u);
  const auto [ys, xs] = phi_identities(phi, inst);
  EXPECT_TRUE(ys && xs);
  const Verdict v = verdict_real_lagrangian(inst);
  EXPECT_FALSE(v.co0_injective);
  EXPECT_TRUE(v.costar_injective);
  EXPECT_FALSE(has_status(v, "failed"));
}

TEST(Phi, RequiresEvenCase) {
  EXPECT_EQ(kind_of([] { build_phi(picard2(6, 2, {1, 1})); }), ErrorKind::HypothesisViolation);
}

TEST(Verdict, Flagship) {
  const Verdict v = verdict_real_lagrangian(picard2(9, 2, {1, 1}));
  EXPECT_FALSE(v.co0_injective);
  EXPECT_TRUE(v.costar_injective);
  EXPECT_TRUE(v.split_generates);
  EXPECT_EQ(v.qh_dim, 24u);
  EXPECT_EQ(v.ker_f_dim, 12u);
  EXPECT_TRUE(has_status(v, "axiom"));
  EXPECT_FALSE(has_status(v, "failed"));
}

TEST(Verdict, ProjectiveExamples) {
  const Verdict v2 = verdict_real_lagrangian(cpn(2));
  EXPECT_TRUE(v2.co0_injective);
  EXPECT_TRUE(v2.split_generates);
  const Verdict v3 = verdict_real_lagrangian(cpn(3));
  EXPECT_FALSE(v3.co0_injective);
  EXPECT_TRUE(v3.costar_injective);
}

TEST(Verdict, OddBranchWithEvenKIsInjective) {
  for (const auto& inst : {picard2(6, 2, {1, 1}), picard2(8, 2, {3, 1}), picard2(14, 4, {1, 1, 1, 3})}) {
    const Verdict v = verdict_real_lagrangian(inst);
    EXPECT_TRUE(v.co0_injective) << inst.n;
    EXPECT_FALSE(has_status(v, "failed"));
  }
}

// With w = x+y the relations become (w^2+1)^5 = w^6, a square in char 2, so
// H(w) = w^5+w^4+w^3+w+1 is a nonzero element with H^2 = 0.
TEST(Verdict, OddBranchWithOddKHasFrobeniusKernel) {
  const ToricInstance inst = picard2(5, 1, {1});
  const auto qh = qh_picard2(inst);
  const RingElement h = qh.ring->element("(x+y)^5+(x+y)^4+(x+y)^3+(x+y)+1");
  EXPECT_FALSE(h.is_zero());
  EXPECT_TRUE(co0_real(h).is_zero());

  const Verdict v = verdict_real_lagrangian(inst);
  EXPECT_FALSE(v.co0_injective);
  EXPECT_EQ(v.ker_f_dim, 5u);
  EXPECT_TRUE(has_status(v, "failed"));
  EXPECT_FALSE(v.split_generates);
}

TEST(Verdict, Preconditions) {
  EXPECT_EQ(kind_of([] { verdict_real_lagrangian(picard2(9, 2, {2, 0})); }), ErrorKind::HypothesisViolation);
  EXPECT_EQ(kind_of([] { verdict_real_lagrangian(picard2(5, 2, {1, 1})); }), ErrorKind::HypothesisViolation);
}

TEST(Properties, SeidelSquaresToOneAndGeneratesKernel) {
  for (const auto& inst : {picard2(9, 2, {1, 1}), picard2(7, 2, {1, 1}), picard2(11, 2, {3, 3}), picard2(13, 4, {1, 1, 1, 1})}) {
    if (inst.minimal_chern() < 2) continue;
    const auto qh = qh_picard2(inst);
    const RingElement s = seidel_picard2(qh, inst);
    EXPECT_TRUE(s.pow(2).is_one());
    const Subspace ker = frobenius_kernel(*qh.ring);
    EXPECT_TRUE(ideal_equal(ker, ideal_span({s + qh.ring->element("1")}), *qh.ring)) << inst.n;
    EXPECT_TRUE(square_is_zero(*qh.ring, ker));
  }
}

TEST(Properties, Co0IsMultiplicative) {
  std::mt19937_64 rng(31);
  const auto qh = qh_picard2(picard2(9, 2, {1, 1}));
  const std::size_t d = qh.ring->dim();
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 100; ++t) {
    Vector a = zero_vector(Field(2), d), b = a;
    for (std::size_t i = 0; i < d; ++i) {
      if (coin(rng)) a[i] = Field(2).one();
      if (coin(rng)) b[i] = Field(2).one();
    }
    const RingElement f = qh.ring->element(a), g = qh.ring->element(b);
    EXPECT_EQ(co0_real(f * g), co0_real(f) * co0_real(g));
  }
}
