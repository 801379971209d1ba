#include <gtest/gtest.h>

#include "closurelab/algebra.hpp"

using namespace closurelab;

TEST(Linalg, EchelonInsertAndReduce) {
  Fp f(3);
  Subspace s(f, 4);
  EXPECT_TRUE(s.insert({0, 2, 1, 0}));
  EXPECT_TRUE(s.insert({1, 1, 0, 0}));
  EXPECT_FALSE(s.insert({2, 0, 2, 0}));  // 2*(1,1,0,0) + 2*(0,2,1,0)
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s.pivots(), (std::vector<int>{0, 1}));
  for (const auto& r : s.rows()) EXPECT_EQ(r[s.pivots()[&r - &s.rows()[0]]], 1);
  EXPECT_TRUE(s.contains(Vec{1, 1, 0, 0}));
  EXPECT_FALSE(s.contains(Vec{0, 0, 0, 1}));
}

TEST(Linalg, PerpAndIntersection) {
  Fp f(2);
  Subspace a = Subspace::span(f, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
  Subspace b = Subspace::span(f, 4, {{1, 0, 0, 0}, {0, 1, 1, 0}});
  Subspace i = intersect(a, b);
  EXPECT_EQ(i.dim(), 1);
  EXPECT_TRUE(i.contains(Vec{1, 1, 1, 0}));
  EXPECT_EQ(perp(perp(a)), a);
  EXPECT_EQ(perp(a).dim(), 2);
}

TEST(Linalg, SubspaceCountsMatchGaussianBinomials) {
  // number of subspaces of F_2^4: 1 + 15 + 35 + 15 + 1
  EXPECT_EQ(all_subspaces(Fp(2), 4).size(), 67u);
  // subspaces of F_3^3: 1 + 13 + 13 + 1
  EXPECT_EQ(all_subspaces(Fp(3), 3).size(), 28u);
}

TEST(Semigroup, BasicInvariants) {
  NumericalSemigroup s25({2, 5});
  EXPECT_EQ(s25.gaps(), (std::vector<int>{1, 3}));
  EXPECT_EQ(s25.frobenius(), 3);
  EXPECT_EQ(s25.conductor(), 4);
  EXPECT_TRUE(s25.symmetric());
  NumericalSemigroup s1({1});
  EXPECT_TRUE(s1.gaps().empty());
  EXPECT_EQ(s1.frobenius(), -1);
  NumericalSemigroup s35({3, 5});
  // membership by brute force up to 15
  std::vector<int> gaps;
  for (int n = 1; n <= 15; ++n) {
    bool in = false;
    for (int a = 0; 3 * a <= n; ++a)
      if ((n - 3 * a) % 5 == 0) in = true;
    if (!in) gaps.push_back(n);
  }
  EXPECT_EQ(s35.gaps(), gaps);
  EXPECT_EQ(s35.frobenius(), 7);
  EXPECT_THROW(NumericalSemigroup({4, 6}), std::invalid_argument);
}

TEST(Semigroup, ExactnessWindow) {
  NumericalSemigroup s25({2, 5}), s1({1});
  EXPECT_EQ(exactness_window({9}, s25.conductor(), s25.max_generator()), 23);
  EXPECT_EQ(auto_truncation({9}, s25.conductor(), s25.max_generator()), 24);
  EXPECT_EQ(exactness_window({3}, s1.conductor(), s1.max_generator()), 5);
  EXPECT_EQ(exactness_window({}, s25.conductor(), s25.max_generator()), 5);
}

TEST(Algebra, SemigroupBasisAndTruncation) {
  auto r = LocalAlgebra::semigroup(NumericalSemigroup({2, 5}), 2, 20);
  std::vector<int> degs;
  for (int i = 0; i < r->dim(); ++i) degs.push_back(r->exponent(i)[0]);
  std::vector<int> want{0, 2};
  for (int s = 4; s < 20; ++s) want.push_back(s);
  EXPECT_EQ(degs, want);
  int x5 = r->index_of({5}), x10 = r->index_of({10});
  EXPECT_EQ(r->prod(x5, x5), x10);
  EXPECT_EQ(r->prod(x10, x10), -1);
  EXPECT_EQ(r->m_generators(), (std::vector<int>{r->index_of({2}), x5}));
  EXPECT_THROW(LocalAlgebra::semigroup(NumericalSemigroup({2, 5}), 2, 14), std::invalid_argument);
}

TEST(Algebra, PowerSeriesOverF3) {
  auto r = LocalAlgebra::semigroup(NumericalSemigroup({1}), 3, 5);
  EXPECT_EQ(r->dim(), 5);
  EXPECT_EQ(r->field().p(), 3);
  EXPECT_EQ(r->label(2), "x^2");
}

TEST(Algebra, MonomialQuotientRelationKills) {
  auto r = LocalAlgebra::monomial_quotient({"x", "y"}, {{2, 2}}, 2, 12);
  int x2y = r->index_of({2, 1}), x3y = r->index_of({3, 1}), y = r->index_of({0, 1}), xy = r->index_of({1, 1});
  EXPECT_EQ(r->prod(x2y, y), -1);
  EXPECT_EQ(r->prod(x3y, y), -1);
  EXPECT_EQ(r->prod(xy, xy), -1);
  EXPECT_EQ(r->index_of({2, 2}), -1);
  auto free = LocalAlgebra::monomial_quotient({"x", "y"}, {}, 2, 10);
  EXPECT_EQ(free->dim(), 55);
  EXPECT_THROW(LocalAlgebra::monomial_quotient({"x", "y"}, {{6, 6}}, 2, 12), std::invalid_argument);
}

TEST(Algebra, TRingMembership) {
  auto t = LocalAlgebra::t_ring(2, 16);
  EXPECT_EQ(t->index_of({1, 0}), -1);
  EXPECT_EQ(t->index_of({3, 0}), -1);
  EXPECT_GE(t->index_of({0, 1}), 0);
  EXPECT_GE(t->index_of({1, 1}), 0);
  EXPECT_GE(t->index_of({5, 0}), 0);
  std::vector<std::string> gens;
  for (int k : t->m_generators()) gens.push_back(t->label(k));
  EXPECT_EQ(gens, (std::vector<std::string>{"y", "x^2", "x*y", "x^5"}));
}

namespace {

Vec mono(const AlgebraPtr& a, std::vector<int> e) { return a->basis_vector(a->index_of(e)); }

}  // namespace

TEST(Submodules, IdealOperationsInSemigroupRing) {
  auto a = LocalAlgebra::semigroup(NumericalSemigroup({2, 5}), 2, 24);
  auto R = Module::regular(a);
  Submodule i4 = generate(R, {mono(a, {4})});
  // (x^4) = {4,6,8,9,10,...}
  EXPECT_FALSE(i4.contains(mono(a, {5})));
  EXPECT_FALSE(i4.contains(mono(a, {7})));
  EXPECT_TRUE(i4.contains(mono(a, {9})));
  Submodule m = maximal_ideal(R);
  EXPECT_EQ(mu(m), 2);
  // (m x^4 : m) = (x^4, x^7)
  Submodule mbf = colon_m(m_times(i4), whole(R));
  Submodule want = generate(R, {mono(a, {4}), mono(a, {7})});
  EXPECT_EQ(mbf, want);
  EXPECT_EQ(colength(want), 3);
  // Ann(R / (x^4)) = (x^4)
  Submodule ann = colon_ideal(i4, whole(R), R);
  EXPECT_EQ(ann, i4);
  // colon by the zero ideal is the whole ring
  EXPECT_EQ(colon(i4, whole(R), zero(R)), whole(R));
  auto gens = minimal_generators(want);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], mono(a, {4}));
}

TEST(Submodules, IntervalEnumerationCountsChains) {
  // k[x]/(x^5): ideals form a chain of length 6
  auto a = LocalAlgebra::semigroup(NumericalSemigroup({1}), 3, 5);
  auto R = Module::regular(a);
  auto all = submodule_interval(zero(R), whole(R), 1000);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_THROW(submodule_interval(zero(R), whole(R), 3), EnumerationBound);
}
