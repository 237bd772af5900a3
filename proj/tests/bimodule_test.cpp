#include <gtest/gtest.h>

#include "coringlab/tensor.hpp"
#include "fixtures.hpp"
#include "random_bimodules.hpp"

namespace coringlab {
namespace {

using testing::F2;
using testing::F3;
using testing::QQ;

TEST(BimoduleTest, ValidationNamesTheFailingLaw) {
  Field f = F2();
  auto b = testing::dual_numbers(f);
  auto k = field_algebra(f);
  // x acting as the identity violates x^2 = 0
  EXPECT_THROW(Bimodule::create(b, k, 1, {Mat::identity(f, 1), Mat::identity(f, 1)}, {Mat::identity(f, 1)}),
               AxiomViolation);
  EXPECT_NO_THROW(testing::dual_number_module(f));
  EXPECT_NO_THROW(testing::row_module(2, f));
  EXPECT_NO_THROW(Bimodule::regular(matrix_algebra(2, f)).validate());
}

TEST(BimoduleTest, RightDualExamples) {
  EXPECT_EQ(right_dual(testing::kn_bimodule(3, QQ())).module.dim(), 3u);
  auto rows = right_dual(testing::row_module(2, F2()));
  EXPECT_EQ(rows.module.dim(), 2u);
  auto eps = right_dual(testing::dual_number_module(F2()));
  ASSERT_EQ(eps.module.dim(), 1u);
  EXPECT_TRUE(eps.module.right_action(1).is_zero());
  EXPECT_NO_THROW(rows.module.validate());
  EXPECT_NO_THROW(eps.module.validate());
}

TEST(BimoduleTest, LeftDualExamples) {
  EXPECT_EQ(left_dual(testing::kn_bimodule(2, F3())).module.dim(), 2u);
  auto eps = left_dual(testing::dual_number_module(F2()));
  ASSERT_EQ(eps.module.dim(), 1u);
  // the only functional sends the generator to x
  EXPECT_EQ(eps.map(Vec::unit(F2(), 1, 0)), Mat::from_ints(F2(), {{0}, {1}}));
  auto b = testing::dual_numbers(F3());
  auto reg = left_dual(Bimodule::regular(b));
  EXPECT_EQ(reg.module.dim(), 2u);
  EXPECT_NO_THROW(reg.module.validate());
  // orientation: *M of a (B,A)-bimodule is an (A,B)-bimodule
  auto rows = left_dual(testing::row_module(2, F2()));
  EXPECT_TRUE(same_algebra(rows.module.left_algebra(), matrix_algebra(2, F2())));
}

TEST(BimoduleTest, DualBasisExamples) {
  auto a = testing::dual_numbers(F2());
  auto reg = dual_basis(Bimodule::regular(a));
  ASSERT_TRUE(reg);
  EXPECT_TRUE(verify_dual_basis(*reg));
  auto k2 = dual_basis(testing::kn_bimodule(2, F2()));
  ASSERT_TRUE(k2);
  EXPECT_EQ(k2->dual.map(k2->functionals[0]), Mat::from_ints(F2(), {{1, 0}}));
  auto eps = dual_basis(testing::dual_number_module(F2()));
  ASSERT_TRUE(eps);
  // over B the same module is not projective
  EXPECT_FALSE(left_dual_basis(testing::dual_number_module(F2())));
}

TEST(BimoduleTest, NonProjectiveRightModuleHasNoDualBasis) {
  Field f = F2();
  auto b = testing::dual_numbers(f);
  auto k = field_algebra(f);
  Bimodule m = Bimodule::create(k, b, 1, {Mat::identity(f, 1)}, {Mat::identity(f, 1), Mat(f, 1, 1)});
  EXPECT_FALSE(dual_basis(m));
}

TEST(BimoduleTest, EndomorphismAlgebraExamples) {
  auto e = endomorphism_algebra(testing::kn_bimodule(2, F2()));
  EXPECT_TRUE(e.algebra->same_structure(*matrix_algebra(2, F2())));
  EXPECT_EQ(e.from_left.matrix.column(0), e.algebra->unit());
  auto a = testing::dual_numbers(F3());
  EXPECT_EQ(endomorphism_algebra(Bimodule::regular(a)).algebra->dim(), 2u);
  auto eps = endomorphism_algebra(testing::dual_number_module(F2()));
  EXPECT_EQ(eps.algebra->dim(), 1u);
  EXPECT_EQ(eps.from_left.matrix, Mat::from_ints(F2(), {{1, 0}}));
  EXPECT_TRUE(check_algebra_map(eps.from_left));
  EXPECT_NO_THROW(eps.module.validate());
}

TEST(BimoduleTest, HomExamples) {
  EXPECT_EQ(hom_bimodule(testing::kn_bimodule(1, F2()), testing::kn_bimodule(1, F2())).size(), 1u);
  EXPECT_EQ(hom_bimodule(testing::kn_bimodule(2, F2()), testing::kn_bimodule(2, F2())).size(), 4u);
  Field f = F2();
  auto eps = endomorphism_algebra(testing::dual_number_module(f));
  auto b = eps.from_left.source;
  Bimodule s = Bimodule::regular(eps.algebra).restrict_left(eps.from_left).restrict_right(eps.from_left);
  auto hom = hom_bimodule(s, Bimodule::regular(b));
  ASSERT_EQ(hom.size(), 1u);
  EXPECT_EQ(hom[0].matrix, Mat::from_ints(f, {{0}, {1}}));
  EXPECT_TRUE(is_bimodule_map(hom[0]));
}

TEST(BimoduleTest, IsomorphismSearch) {
  auto m = testing::row_module(2, F3());
  auto same = random_bimodule_iso(m, m);
  EXPECT_EQ(same.verdict, IsoVerdict::Found);
  EXPECT_EQ(same.method, "identity");
  auto k2 = testing::kn_bimodule(2, F2());
  auto r = random_bimodule_iso(right_dual(k2).module, left_dual(k2).module);
  EXPECT_EQ(r.verdict, IsoVerdict::Found);
  auto eps = testing::dual_number_module(F2());
  auto e = random_bimodule_iso(right_dual(eps).module, left_dual(eps).module);
  ASSERT_EQ(e.verdict, IsoVerdict::Found);
  EXPECT_TRUE(is_bimodule_map(*e.iso));
  // different dimensions are a proven negative
  EXPECT_EQ(random_bimodule_iso(k2, testing::kn_bimodule(3, F2())).verdict, IsoVerdict::ProvenAbsent);
}

TEST(BimoduleTest, IsomorphismSearchProvesAbsenceByEnumeration) {
  Field f = F2();
  auto kk = direct_product(field_algebra(f), field_algebra(f));
  auto k = field_algebra(f);
  // e1 A and e2 A as (k, k x k)-bimodules are non-isomorphic
  Bimodule p1 = Bimodule::create(k, kk, 1, {Mat::identity(f, 1)}, {Mat::identity(f, 1), Mat(f, 1, 1)});
  Bimodule p2 = Bimodule::create(k, kk, 1, {Mat::identity(f, 1)}, {Mat(f, 1, 1), Mat::identity(f, 1)});
  auto r = random_bimodule_iso(p1, p2);
  EXPECT_EQ(r.verdict, IsoVerdict::ProvenAbsent);
  // over Q the same search can only be inconclusive when the hom space is nonzero
  Field q = QQ();
  auto d = testing::dual_numbers(q);
  auto kq = field_algebra(q);
  Bimodule reg = Bimodule::regular(d).forget_left();
  auto s = random_bimodule_iso(reg, Bimodule::create(kq, d, 2, {Mat::identity(q, 2)},
                                                      {Mat::identity(q, 2), Mat::from_ints(q, {{0, 0}, {0, 0}})}));
  EXPECT_EQ(s.verdict, IsoVerdict::Inconclusive);
}

TEST(TensorTest, Examples) {
  auto k = testing::kn_bimodule(1, F2());
  EXPECT_EQ(TensorSpace(k, k).dim(), 1u);
  Field f = F2();
  auto b = testing::dual_numbers(f);
  auto kf = field_algebra(f);
  Bimodule left = Bimodule::create(kf, b, 1, {Mat::identity(f, 1)}, {Mat::identity(f, 1), Mat(f, 1, 1)});
  Bimodule right = testing::dual_number_module(f);
  EXPECT_EQ(TensorSpace(left, right).dim(), 1u);
  TensorSpace rc(testing::row_module(2, f), testing::column_module(2, f));
  EXPECT_EQ(rc.dim(), 1u);
  EXPECT_EQ(rc.pure(Vec::unit(f, 2, 0), Vec::unit(f, 2, 0)), rc.pure(Vec::unit(f, 2, 1), Vec::unit(f, 2, 1)));
  EXPECT_TRUE(rc.pure(Vec::unit(f, 2, 0), Vec::unit(f, 2, 1)).is_zero());
  EXPECT_THROW(TensorSpace(right, right), AlgebraMismatch);
}

// Balancing, induced actions and functoriality on a bimodule with a
// nontrivial middle algebra.
TEST(TensorTest, BalancingActionsAndFunctoriality) {
  for (Field f : {F2(), F3(), QQ()}) {
    auto a = testing::dual_numbers(f);
    Bimodule m = Bimodule::regular(a);
    Bimodule n = right_dual(Bimodule::regular(a)).module;  // (A,A)
    TensorSpace t(m, n);
    EXPECT_EQ(t.dim(), 2u);
    EXPECT_NO_THROW(t.module().validate());
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t x = 0; x < a->dim(); ++x)
        for (std::size_t j = 0; j < n.dim(); ++j)
          EXPECT_EQ(t.pure(m.right_action(x) * m.basis(i), n.basis(j)),
                    t.pure(m.basis(i), n.left_action(x) * n.basis(j)));
    // f = left multiplication by x on M, g = identity on N
    Mat fm = m.left_action(1);
    Mat g = Mat::identity(f, n.dim());
    Mat fg = tensor_maps(t, t, fm, g);
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < n.dim(); ++j)
        EXPECT_EQ(fg * t.pure(m.basis(i), n.basis(j)), t.pure(fm * m.basis(i), n.basis(j)));
    auto pres = t.presentation();
    EXPECT_TRUE((pres.projection * pres.section).is_identity());
  }
}

TEST(TensorTest, TensorWithDualMatchesEndomorphismDimension) {
  std::vector<Bimodule> mods = {testing::kn_bimodule(3, F3()), testing::row_module(2, F2()),
                                testing::dual_number_module(F2()), Bimodule::regular(testing::dual_numbers(QQ()))};
  for (const auto& m : mods) {
    auto e = endomorphism_algebra(m);
    EXPECT_EQ(TensorSpace(e.module, right_dual(e.module).module).dim(), e.algebra->dim());
  }
}

TEST(SIsoTest, RoundTripAndProductRules) {
  Field f = F2();
  auto k1 = canonical_s_iso(testing::kn_bimodule(1, f));
  EXPECT_TRUE(k1.forward.is_identity());
  auto k2 = canonical_s_iso(testing::kn_bimodule(2, f));
  EXPECT_TRUE(check_s_iso_product_rules(k2));
  // E_ij corresponds to e_i (x) e_j*
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Vec t = k2.tensor.pure(Vec::unit(f, 2, i), k2.basis.functionals[j]);
      EXPECT_EQ(k2.endo.map(k2.forward * t), Mat::reshape(Vec::unit(f, 4, i * 2 + j), 2, 2));
    }
  // (e1 (x) e1*)(e2 (x) e2*) = 0
  Vec a = k2.forward * k2.tensor.pure(Vec::unit(f, 2, 0), k2.basis.functionals[0]);
  Vec b = k2.forward * k2.tensor.pure(Vec::unit(f, 2, 1), k2.basis.functionals[1]);
  EXPECT_TRUE(k2.endo.algebra->multiply(a, b).is_zero());
  EXPECT_TRUE(check_s_iso_product_rules(canonical_s_iso(testing::row_module(2, F3()))));
  EXPECT_TRUE(check_s_iso_product_rules(canonical_s_iso(Bimodule::regular(testing::dual_numbers(QQ())))));
  Bimodule bad = Bimodule::create(field_algebra(f), testing::dual_numbers(f), 1, {Mat::identity(f, 1)},
                                  {Mat::identity(f, 1), Mat(f, 1, 1)});
  EXPECT_THROW(canonical_s_iso(bad), NotProjective);
}

// Independent oracle: all n.dim x m.dim matrices commuting with both actions,
// solved through the Kronecker-vectorized system.
std::size_t kron_hom_dim(const Bimodule& m, const Bimodule& n) {
  const Field& f = m.field();
  std::size_t r = n.dim(), c = m.dim();
  std::vector<Mat> blocks;
  auto add = [&](const Mat& x, const Mat& y) {
    blocks.push_back(Mat::kron(Mat::identity(f, r), x.transpose()) - Mat::kron(y, Mat::identity(f, c)));
  };
  for (std::size_t b = 0; b < m.left_algebra()->dim(); ++b) add(m.left_action(b), n.left_action(b));
  for (std::size_t a = 0; a < m.right_algebra()->dim(); ++a) add(m.right_action(a), n.right_action(a));
  return r * c - rank(Mat::vstack(f, r * c, blocks));
}

TEST(HomPropertyTest, MatchesKroneckerOracle) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    Field f = t % 3 == 0 ? QQ() : (t % 3 == 1 ? F2() : F3());
    auto x = testing::random_instance(rng, f);
    auto y = testing::random_instance(rng, f);
    SCOPED_TRACE(x.description);
    std::vector<std::pair<Bimodule, Bimodule>> pairs = {{x.m, x.m}, {x.m.forget_left(), x.m.forget_left()}};
    if (same_algebra(x.a, y.a)) pairs.push_back({x.m.forget_left(), y.m.forget_left()});
    Bimodule reg = Bimodule::regular(x.b_to_s.source);
    pairs.push_back({reg, reg});
    for (const auto& [m, n] : pairs) {
      HomSpace h = hom_space(m, n);
      EXPECT_EQ(h.dim(), kron_hom_dim(m, n));
      for (const auto& g : h.basis()) EXPECT_TRUE(is_bimodule_map(g));
    }
    Dual ld = left_dual(x.m);
    EXPECT_EQ(ld.module.dim(), kron_hom_dim(x.m.forget_right(), Bimodule::regular(x.b_to_s.source).forget_right()));
  }
}

}  // namespace
}  // namespace coringlab
