#include <gtest/gtest.h>

#include "closurelab/reductions.hpp"
#include "fixtures.hpp"

using namespace closurelab;
using fixtures::Ring25;

namespace {

std::vector<std::string> names(const std::vector<Submodule>& s) {
  std::vector<std::string> out;
  for (const auto& x : s) out.push_back(format_submodule(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Reductions, IsReductionMbfVersusIntegral) {
  Ring25 r;
  auto n = r("(x^6, x^7)"), l = r("(x^6, x^9)");
  EXPECT_FALSE(is_reduction(mbf_closure(), l, n, r.all()));
  EXPECT_TRUE(is_reduction(integral_closure(), l, n, r.all()));
  EXPECT_TRUE(is_reduction(mbf_closure(), n, n, r.all()));
}

TEST(Reductions, CoreTriples) {
  Ring25 r;
  auto mbf = mbf_closure();
  struct Row {
    const char* n;
    const char* precore;
    const char* core;
    const char* prehull;
  };
  for (const Row& row : {Row{"(x^4)", "(x^6, x^9)", "(x^4)", "(x^6, x^9)"},
                         Row{"(x^4, x^7)", "(x^6, x^7)", "(x^6, x^9)", "(x^6, x^7)"},
                         Row{"(x^4, x^5)", "(x^6, x^7)", "(x^4, x^5)", "(x^4, x^5)"}}) {
    auto n = r(row.n);
    auto red = enumerate_reductions(mbf, n, r.all());
    auto pre = enumerate_prereductions(mbf, n, r.all());
    ASSERT_TRUE(pre.precore && pre.prehull) << row.n;
    EXPECT_EQ(*pre.precore, r(row.precore)) << row.n;
    EXPECT_EQ(red.core, r(row.core)) << row.n;
    EXPECT_EQ(*pre.prehull, r(row.prehull)) << row.n;
  }
}

TEST(Reductions, MinimalReductionsOfX4X7) {
  Ring25 r;
  auto red = enumerate_reductions(mbf_closure(), r("(x^4, x^7)"), r.all());
  EXPECT_EQ(names(red.minimal), (std::vector<std::string>{"(x^4 + x^7)", "(x^4)"}));
  ASSERT_TRUE(red.spread);
  EXPECT_EQ(*red.spread, 1);
  EXPECT_FALSE(red.basic);
}

TEST(Reductions, X4X5IsBasicWithThreePrereductions) {
  Ring25 r;
  auto n = r("(x^4, x^5)");
  EXPECT_TRUE(enumerate_reductions(mbf_closure(), n, r.all()).basic);
  // (x^4 + a x^5, x^7) for a in F_2, and (x^5, x^6)
  auto pre = enumerate_prereductions(mbf_closure(), n, r.all());
  std::vector<Submodule> want{r("(x^4 + x^5, x^7)"), r("(x^4, x^7)"), r("(x^5, x^6)")};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(pre.prereductions, want);
}

TEST(Reductions, PrereductionsOfX6X7) {
  Ring25 r;
  auto n = r("(x^6, x^7)");
  // over F_2 the family (y_1) + m y_2 has three members, one for each line of N/mN kept as y_1
  EXPECT_EQ(names(enumerate_prereductions(mbf_closure(), n, r.all()).prereductions),
            (std::vector<std::string>{"(x^6 + x^7, x^8)", "(x^6, x^9)", "(x^7, x^8)"}));
  EXPECT_EQ(names(enumerate_prereductions(integral_closure(), n, r.all()).prereductions),
            (std::vector<std::string>{"(x^7, x^8)"}));
}

TEST(Reductions, IndependenceAndStructure) {
  Ring25 r;
  auto n = r("(x^6, x^7)");
  const auto& a = *r.a;
  Vec x6 = parse_element(a, "x^6"), x7 = parse_element(a, "x^7");
  EXPECT_TRUE(cl_independent(mbf_closure(), {x6, x7}, r.all()));
  EXPECT_FALSE(cl_independent(integral_closure(), {x6, x7}, r.all()));
  EXPECT_TRUE(strongly_cl_independent(mbf_closure(), n, r.all()));
  auto v = basic_structure_check(mbf_closure(), n, r.all());
  EXPECT_TRUE(v.applicable);
  EXPECT_TRUE(v.pass) << v.detail;
  auto principal = basic_structure_check(mbf_closure(), r("(x^4)"), r.all());
  EXPECT_TRUE(principal.pass) << principal.detail;
  EXPECT_TRUE(basic_structure_check(mbf_closure(), zero(r.R), r.all()).pass);
}

TEST(Reductions, UnionOfPrereductions) {
  Ring25 r;
  auto n = r("(x^6, x^7)");
  auto mbf = union_prereductions_check(mbf_closure(), n, r.all());
  EXPECT_TRUE(mbf.pass) << mbf.detail;
  EXPECT_NE(mbf.detail.find("has no cyclic"), std::string::npos);
  auto integral = union_prereductions_check(integral_closure(), n, r.all());
  EXPECT_TRUE(integral.pass) << integral.detail;
  EXPECT_NE(integral.detail.find("misses"), std::string::npos);
}

TEST(Reductions, CoverClassification) {
  Ring25 r;
  auto n = r("(x^6, x^7)"), k = r("(x^6, x^9)");
  EXPECT_EQ(cover_classify(mbf_closure(), k, n, r.all()), CoverKind::NonClCover);
  EXPECT_EQ(cover_classify(integral_closure(), k, n, r.all()), CoverKind::ClCover);
  EXPECT_EQ(cover_classify(mbf_closure(), n, n, r.all()), CoverKind::NotCover);
}

TEST(Reductions, ZeroIdeal) {
  Ring25 r;
  auto red = enumerate_reductions(mbf_closure(), zero(r.R), r.all());
  ASSERT_EQ(red.reductions.size(), 1u);
  EXPECT_EQ(red.core, zero(r.R));
  EXPECT_TRUE(enumerate_prereductions(mbf_closure(), zero(r.R), r.all()).prereductions.empty());
}

TEST(Reductions, LiftedWalkVisitsEachSubmoduleOnce) {
  Ring25 r(16);
  auto n = r("(x^6, x^7)");
  std::vector<Submodule> seen;
  EnumStats stats;
  for_each_lifted(n, zero(r.R), {}, stats, [&](const Submodule& l, int t) {
    seen.push_back(l);
    EXPECT_EQ(t, l.dim() - m_times(l).dim());
  });
  auto sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  // lifted submodules are exactly those with mu(L) = dim (L + mN)/mN
  long expected = 0;
  for (const auto& l : submodule_interval(zero(r.R), n, 1 << 20)) {
    Submodule lm = sum(l, m_times(n));
    if (l.dim() - m_times(l).dim() == lm.dim() - m_times(n).dim()) ++expected;
  }
  EXPECT_EQ(static_cast<long>(seen.size()), expected);
}

TEST(Reductions, BoundRefusalAndSampling) {
  Ring25 r;
  auto n = r("(x^4, x^5)");
  EnumOptions tight;
  tight.bound = 3;
  EXPECT_THROW(enumerate_reductions(mbf_closure(), n, r.all(), tight), EnumerationBound);
  EnumOptions sample;
  sample.sample = 5;
  sample.seed = 7;
  auto rep = enumerate_reductions(mbf_closure(), n, r.all(), sample);
  EXPECT_EQ(rep.mode, EnumMode::Sampled);
  auto again = enumerate_reductions(mbf_closure(), n, r.all(), sample);
  EXPECT_EQ(rep.reductions, again.reductions);
}

TEST(Reductions, AllBasesCount) {
  // ordered bases of F_q^2 number (q^2 - 1)(q^2 - q); halve for unordered
  EXPECT_EQ(all_bases(Fp(2), 2).size(), 3u);
  EXPECT_EQ(all_bases(Fp(3), 2).size(), 24u);
  EXPECT_EQ(all_bases(Fp(2), 0).size(), 1u);
}

TEST(Reductions, LiftedSearchMatchesNaiveOracle) {
  Ring25 r(16);
  auto q = LocalAlgebra::monomial_quotient({"x", "y"}, {{2, 2}}, 2, 5);
  auto qr = Module::regular(q);
  struct Case {
    ModulePtr ring;
    Submodule n;
    std::vector<PairOp> ops;
  };
  std::vector<Case> cases{{r.R, r("(x^10, x^11)"), {mbf_closure(), ord_closure(), integral_closure()}},
                          {r.R, r("(x^9)"), {mbf_closure(), ord_closure(), integral_closure()}},
                          {qr, parse_ideal(qr, "(x*y)"), {mbf_closure(), ord_closure()}}};
  for (const auto& c : cases) {
    ASSERT_LE(c.n.dim(), 6);
    Submodule m = whole(c.ring), mn = m_times(c.n);
    for (const auto& cl : c.ops) {
      std::string label = cl.name() + " " + format_submodule(c.n);
      auto naive = naive_reductions(cl, c.n, m);
      std::vector<Submodule> lifted_naive;
      for (const auto& l : naive)
        if (l.dim() - m_times(l).dim() == sum(l, mn).dim() - mn.dim()) lifted_naive.push_back(l);
      std::sort(lifted_naive.begin(), lifted_naive.end());
      auto rep = enumerate_reductions(cl, c.n, m);
      EXPECT_EQ(rep.reductions, lifted_naive) << label;
      EXPECT_EQ(rep.minimal, minimal_elements(naive)) << label;
      EXPECT_EQ(rep.core, intersect_all(naive, c.n)) << label;
    }
  }
}
