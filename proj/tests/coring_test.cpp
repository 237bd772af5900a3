#include <gtest/gtest.h>

#include "coring_fixtures.hpp"
#include "coringlab/error.hpp"

namespace coringlab {
namespace {

using testing::F2;
using testing::F3;
using testing::QQ;

Scalar one(const Field& f) { return Scalar::one(f); }

TEST(CoringTest, TrivialCoringIsValid) {
  for (const Field& f : {F2(), F3(), QQ()}) {
    EXPECT_EQ(trivial_coring(field_algebra(f)).dim(), 1u);
    Coring c = trivial_coring(testing::dual_numbers(f));
    EXPECT_EQ(c.dim(), 2u);
    EXPECT_EQ(c.cc().dim(), 2u);
  }
  EXPECT_NO_THROW(trivial_coring(matrix_algebra(2, F3())));
}

TEST(CoringTest, MatrixCoringIsValid) {
  Coring c = testing::matrix_coring(2, F2());
  EXPECT_EQ(c.dim(), 4u);
  EXPECT_EQ(c.cc().dim(), 16u);
  EXPECT_NO_THROW(testing::matrix_coring(3, QQ()));
}

TEST(CoringTest, CounitIdenticallyOneFailsCounitLaw) {
  Coring good = testing::matrix_coring(2, F2());
  Mat eps(F2(), 1, 4);
  for (std::size_t j = 0; j < 4; ++j) eps.set(0, j, one(F2()));
  try {
    Coring::create(good.cc_ptr(), good.coproduct(), eps);
    FAIL() << "expected a counit failure";
  } catch (const AxiomViolation& e) {
    EXPECT_NE(std::string(e.what()).find("counit law"), std::string::npos) << e.what();
  }
}

TEST(CoringTest, NonCoassociativeCoproductIsRejected) {
  // Delta z carries an extra y (x) z; the counit laws still hold since counit(y) = 0
  Field f = F3();
  Bimodule c = testing::kn_bimodule(3, f);
  auto cc = std::make_shared<const TensorSpace>(c, c);
  Vec x = c.basis(0), y = c.basis(1), z = c.basis(2);
  Vec dx = cc->pure(x, x);
  Vec dy = cc->pure(x, y) + cc->pure(y, x);
  Vec dz = cc->pure(x, z) + cc->pure(z, x) + cc->pure(y, y) + cc->pure(y, z);
  Mat delta = Mat::from_columns(f, cc->dim(), {dx, dy, dz});
  Mat eps = Mat::from_ints(f, {{1, 0, 0}});
  try {
    Coring::create(cc, delta, eps);
    FAIL() << "expected a coassociativity failure";
  } catch (const AxiomViolation& e) {
    EXPECT_NE(std::string(e.what()).find("coassociativity"), std::string::npos) << e.what();
  }
  // without the extra term the coring is valid
  dz = cc->pure(x, z) + cc->pure(z, x) + cc->pure(y, y);
  EXPECT_NO_THROW(Coring::create(cc, Mat::from_columns(f, cc->dim(), {dx, dy, dz}), eps));
}

TEST(CoringTest, CoproductMustBeBimoduleMap) {
  Field f = F2();
  auto b = testing::dual_numbers(f);
  Coring t = trivial_coring(b);
  // Delta(1) = 1 (x) 1, Delta(x) = 1 (x) 1 is not left linear
  Mat bad = t.coproduct();
  bad.set_column(1, t.coproduct().column(0));
  EXPECT_THROW(Coring::create(t.cc_ptr(), bad, t.counit()), AxiomViolation);
}

TEST(CoringTest, IdentityIsCoringMorphism) {
  Coring c = testing::matrix_coring(2, F3());
  EXPECT_TRUE(is_coring_morphism({c, c, Mat::identity(F3(), 4)}));
  // the transpose c_ij -> c_ji reverses the coproduct
  Mat tr(F3(), 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) tr.set(j * 2 + i, i * 2 + j, one(F3()));
  EXPECT_FALSE(is_coring_morphism({c, c, tr}));
}

TEST(SweedlerTest, Dimensions) {
  Field f = F2();
  auto k = field_algebra(f);
  EXPECT_EQ(sweedler_coring(identity_map(k)).coring.dim(), 1u);
  EXPECT_EQ(sweedler_coring(testing::diagonal_map(f)).coring.dim(), 4u);
  auto b = testing::dual_numbers(f);
  AlgebraMap quotient{b, k, Mat::from_ints(f, {{1, 0}})};
  EXPECT_EQ(sweedler_coring(quotient).coring.dim(), 1u);
  EXPECT_EQ(sweedler_coring(unit_map(matrix_algebra(2, f))).coring.dim(), 16u);
  EXPECT_EQ(sweedler_coring(identity_map(b)).coring.dim(), 2u);
}

TEST(SweedlerTest, RejectsNonAlgebraMap) {
  Field f = F2();
  auto k = field_algebra(f);
  auto kk = direct_product(k, k);
  EXPECT_THROW(sweedler_coring({k, kk, Mat::from_ints(f, {{1}, {0}})}), InvalidInput);
}

TEST(SweedlerTest, CounitIsMultiplication) {
  Field f = F3();
  auto m2 = matrix_algebra(2, f);
  SweedlerCoring s = sweedler_coring(unit_map(m2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec c = s.space->pure(m2->basis(i), m2->basis(j));
      EXPECT_EQ(s.coring.counit() * c, m2->product(i, j));
    }
}

TEST(DualRingTest, Examples) {
  EXPECT_EQ(left_dual_ring(trivial_coring(field_algebra(F2()))).algebra->dim(), 1u);
  auto sw = sweedler_coring(testing::diagonal_map(F2()));
  DualRing r = left_dual_ring(sw.coring);
  EXPECT_EQ(r.algebra->dim(), 4u);
  EXPECT_EQ(r.functionals.map(r.algebra->unit()), sw.coring.counit());
}

TEST(DualRingTest, MatrixCoringProductMatchesHandExpansion) {
  // (phi phi')(c_ij) = sum_k phi(c_ik) phi'(c_kj) since A = k
  Field f = F2();
  Coring c = testing::matrix_coring(2, f);
  DualRing r = left_dual_ring(c);
  ASSERT_EQ(r.algebra->dim(), 4u);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Mat fa = r.functionals.map(r.algebra->basis(a));
      Mat fb = r.functionals.map(r.algebra->basis(b));
      Mat prod = r.functionals.map(r.algebra->product(a, b));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          Scalar expect = Scalar::zero(f);
          for (std::size_t k = 0; k < 2; ++k) expect = expect + fa.at(0, i * 2 + k) * fb.at(0, k * 2 + j);
          EXPECT_EQ(prod.at(0, i * 2 + j), expect);
        }
    }
  EXPECT_EQ(center_basis(*r.algebra).size(), 1u);
}

TEST(CosplitTest, Examples) {
  auto t = trivial_coring(testing::dual_numbers(F3()));
  auto e = is_cosplit(t);
  ASSERT_TRUE(e);
  EXPECT_EQ(*e, testing::dual_numbers(F3())->unit());

  Coring m = testing::matrix_coring(2, QQ());
  ASSERT_TRUE(is_cosplit(m));
  Vec c11 = m.carrier().basis(0);
  EXPECT_NO_THROW(cosplit_section(m, c11));
  EXPECT_THROW(cosplit_section(m, m.carrier().basis(1)), InvalidInput);

  Field f = F2();
  auto sw = sweedler_coring(testing::diagonal_map(f));
  Vec e1 = Vec::from_ints(f, {1, 0}), e2 = Vec::from_ints(f, {0, 1});
  Vec idem = sw.space->pure(e1, e1) + sw.space->pure(e2, e2);
  EXPECT_NO_THROW(cosplit_section(sw.coring, idem));
  EXPECT_TRUE(is_cosplit(sw.coring));
  EXPECT_EQ(invariants(sw.coring).dim(), 2u);
}

TEST(CosplitTest, NonSeparableSweedlerIsNotCosplit) {
  // k -> k[x]/x^2 is not a separable extension
  Field f = F2();
  auto b = testing::dual_numbers(f);
  auto sw = sweedler_coring(unit_map(b));
  EXPECT_FALSE(is_cosplit(sw.coring));
}

Mat delta_gamma(const Coring& c, std::size_t n) {
  const Field& f = c.field();
  return testing::map_from_pure(c, [&](std::size_t x, std::size_t y) {
    std::size_t i = x / n, j = x % n, k = y / n, l = y % n;
    return Vec::from_ints(f, {(j == k && i == l) ? 1 : 0});
  });
}

TEST(CointegralTest, Examples) {
  Coring t = trivial_coring(testing::dual_numbers(F3()));
  auto s = find_cointegral(t);
  EXPECT_EQ(s.verdict, Truth::True);
  ASSERT_TRUE(s.cointegral);
  EXPECT_TRUE(verify_cointegral(t, *s.cointegral));

  Coring m = testing::matrix_coring(2, F2());
  // delta_il delta_jk is a pre-cointegral, but gamma o Delta = 2 counit = 0 in characteristic 2
  Mat g = delta_gamma(m, 2);
  EXPECT_TRUE(verify_precointegral(m, g));
  EXPECT_FALSE(verify_cointegral(m, Cointegral{g}));
  // delta_il delta_j1 delta_k1 comes from the splitting s(E) = E_11
  Mat g11 = testing::map_from_pure(m, [&](std::size_t x, std::size_t y) {
    return Vec::from_ints(F2(), {(x / 2 == y % 2 && x % 2 == 0 && y / 2 == 0) ? 1 : 0});
  });
  EXPECT_TRUE(verify_cointegral(m, Cointegral{g11}));
  auto sm = find_cointegral(m);
  EXPECT_EQ(sm.verdict, Truth::True);
  EXPECT_TRUE(verify_cointegral(m, *sm.cointegral));

  Coring m3 = testing::matrix_coring(2, F3());
  Mat half = delta_gamma(m3, 2).scaled(Scalar::from_int(F3(), 2));
  EXPECT_TRUE(verify_cointegral(m3, Cointegral{half}));
}

TEST(CointegralTest, DefectDetectsNonBalancedMap) {
  Coring m = testing::matrix_coring(2, F3());
  // gamma(c_ij (x) c_kl) = delta_ij delta_kl is a bimodule map but not a pre-cointegral
  Mat g = testing::map_from_pure(m, [&](std::size_t x, std::size_t y) {
    return Vec::from_ints(F3(), {(x / 2 == x % 2 && y / 2 == y % 2) ? 1 : 0});
  });
  CointegralChecker chk(m);
  EXPECT_TRUE(chk.is_bimodule_map(g));
  EXPECT_FALSE(chk.is_precointegral(g));
}

TEST(CointegralTest, SplitButNotSeparableSweedlerIsCoseparable) {
  // k -> k[x]/x^2 splits by 1 -> 1, x -> 0 although it is not separable
  auto sw = sweedler_coring(unit_map(testing::dual_numbers(F2())));
  auto s = find_cointegral(sw.coring);
  EXPECT_EQ(s.verdict, Truth::True);
  auto basis = precointegral_basis(sw.coring);
  ASSERT_TRUE(basis);
  for (const auto& g : *basis) EXPECT_TRUE(verify_precointegral(sw.coring, g));
}

TEST(CointegralTest, SizeLimitGivesInconclusive) {
  Coring m = testing::matrix_coring(2, F2());
  SearchLimits tiny;
  tiny.max_unknowns = 4;
  EXPECT_EQ(find_cointegral(m, tiny).verdict, Truth::Inconclusive);
}

TEST(FrobeniusSystemTest, VerifyExamples) {
  Coring m = testing::matrix_coring(2, F2());
  Mat g = delta_gamma(m, 2);
  Vec c11 = m.carrier().basis(0), c22 = m.carrier().basis(3);
  EXPECT_TRUE(verify_frobenius_system(m, {g, c11 + c22}));
  EXPECT_FALSE(verify_frobenius_system(m, {g, c11}));
  CointegralChecker chk(m);
  // gamma(c_22 (x) c_11) = 0 but counit(c_22) = 1
  EXPECT_TRUE(chk.right_pairing(g, c11).at(0, 3).is_zero());

  Field f = F3();
  auto b = testing::dual_numbers(f);
  Coring t = trivial_coring(b);
  Mat mult = testing::map_from_pure(t, [&](std::size_t x, std::size_t y) { return b->product(x, y); });
  EXPECT_TRUE(verify_frobenius_system(t, {mult, b->unit()}));
}

TEST(FrobeniusSystemTest, SearchByEnumeration) {
  Coring m = testing::matrix_coring(2, F2());
  auto s = find_frobenius_system(m, 1);
  EXPECT_EQ(s.verdict, Truth::True);
  EXPECT_EQ(s.method, "enumeration of invariants");
  ASSERT_TRUE(s.system);
  EXPECT_TRUE(verify_frobenius_system(m, *s.system));

  auto t = trivial_coring(testing::dual_numbers(F2()));
  auto st = find_frobenius_system(t, 1);
  ASSERT_EQ(st.verdict, Truth::True);
  EXPECT_EQ(st.system->e, testing::dual_numbers(F2())->unit());

  auto sw = sweedler_coring(testing::diagonal_map(F2()));
  auto ss = find_frobenius_system(sw.coring, 1);
  ASSERT_EQ(ss.verdict, Truth::True);
  EXPECT_TRUE(verify_frobenius_system(sw.coring, *ss.system));
}

TEST(FrobeniusSystemTest, IsomorphismCriterion) {
  Coring m = testing::matrix_coring(2, F3());
  auto s = frobenius_by_isomorphism(m, 5);
  ASSERT_EQ(s.verdict, Truth::True) << s.method;
  EXPECT_TRUE(verify_frobenius_system(m, *s.system));

  auto sw = sweedler_coring(unit_map(matrix_algebra(2, F2())));
  auto ss = frobenius_by_isomorphism(sw.coring, 5);
  ASSERT_EQ(ss.verdict, Truth::True) << ss.method;
  EXPECT_TRUE(verify_frobenius_system(sw.coring, *ss.system));

  auto over_q = frobenius_by_isomorphism(testing::matrix_coring(2, QQ()), 5);
  EXPECT_NE(over_q.verdict, Truth::False);
  if (over_q.system) EXPECT_TRUE(verify_frobenius_system(testing::matrix_coring(2, QQ()), *over_q.system));
}

TEST(FrobeniusSystemTest, FrobeniusExtensionGivesFrobeniusSweedler) {
  // k -> k[x]/x^2 is a Frobenius extension
  Field f = F2();
  auto sw = sweedler_coring(unit_map(testing::dual_numbers(f)));
  auto s = find_frobenius_system(sw.coring, 3);
  ASSERT_EQ(s.verdict, Truth::True);
  EXPECT_TRUE(verify_frobenius_system(sw.coring, *s.system));
}

TEST(SweedlerTest, CorpusPropertyValidates) {
  Field f = F3();
  auto k = field_algebra(f);
  auto b = testing::dual_numbers(f);
  auto m2 = matrix_algebra(2, f);
  std::vector<AlgebraMap> maps = {identity_map(k), testing::diagonal_map(f), unit_map(b), identity_map(b),
                                  unit_map(m2), unit_map(direct_product(k, b))};
  for (const auto& m : maps) {
    auto sw = sweedler_coring(m);
    EXPECT_TRUE(is_coring_morphism({sw.coring, sw.coring, Mat::identity(f, sw.coring.dim())}));
  }
}

}  // namespace
}  // namespace coringlab
