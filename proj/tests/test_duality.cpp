#include <gtest/gtest.h>

#include "closurelab/duality.hpp"
#include "fixtures.hpp"

using namespace closurelab;
using fixtures::Ring25;

namespace {

Vec elem(const ModulePtr& m, const std::string& label) {
  for (int j = 0; j < m->dim(); ++j)
    if (m->label(j) == label) {
      Vec v(m->dim(), 0);
      v[j] = 1;
      return v;
    }
  throw std::runtime_error("no basis element " + label);
}

Submodule span_labels(const ModulePtr& m, const std::vector<std::string>& labels) {
  std::vector<Vec> gens;
  for (const auto& l : labels) gens.push_back(elem(m, l));
  return generate(m, gens);
}

// x, x^3 and x^-1 .. x^-n, plus any extra negative exponents
Submodule e_window(const ModulePtr& e, int n, const std::vector<int>& extra = {}) {
  std::vector<std::string> labels{"x", "x^3"};
  for (int i = 1; i <= n; ++i) labels.push_back("x^-" + std::to_string(i));
  for (int i : extra) labels.push_back("x^-" + std::to_string(i));
  return span_labels(e, labels);
}

void expect_all_pass(const std::vector<CheckResult>& rs, const std::string& label) {
  for (const auto& r : rs)
    if (!r.disputed) EXPECT_TRUE(r.pass) << label << ": " << r.name << " -- " << r.witness;
  EXPECT_TRUE(all_pass(rs)) << label;
}

struct Pair {
  Submodule a, b;
  std::string label;
};

// duality fixtures over F_2 with dim B/A <= 4
std::vector<Pair> duality_pairs(const Ring25& r) {
  ModulePtr e = injective_hull(r.R);
  return {{r("(x^4, x^7)"), r.all(), "(x^4, x^7) in R"},
          {r("(x^10, x^11)"), r("(x^6, x^7)"), "(x^10, x^11) in (x^6, x^7)"},
          {r("(x^9, x^12)"), r("(x^6, x^9)"), "(x^9, x^12) in (x^6, x^9)"},
          {r("(x^6 + x^7, x^9)"), r("(x^6, x^7)"), "(x^6 + x^7, x^9) in (x^6, x^7)"},
          {e_window(e, 4), annihilated_by(r("(x^12, x^13)")), "M in the socle of (x^12, x^13) in E"}};
}

}  // namespace

TEST(Interiors, MbeTable) {
  Ring25 r;
  auto mbe = mbe_interior();
  EXPECT_EQ(mbe(r("m"), r.all()), r("m"));
  for (int n : {2, 4, 5, 6, 7, 8, 9, 10, 11, 12})
    EXPECT_EQ(mbe(r("(x^" + std::to_string(n) + ")"), r.all()), r("(x^" + std::to_string(n + 2) + ", x^" + std::to_string(n + 5) + ")")) << n;
  EXPECT_EQ(mbe(r("(x^4, x^5)"), r.all()), r("(x^4, x^7)"));
  EXPECT_EQ(mbe(r("(x^5, x^6)"), r.all()), r("(x^6, x^7)"));
  EXPECT_EQ(mbe(r("(x^4, x^7)"), r.all()), r("(x^4, x^7)"));
  EXPECT_EQ(mbe(r("(x^5, x^8)"), r.all()), r("(x^7, x^8)"));
  for (int n = 6; n <= 12; ++n) {
    auto p = r("(x^" + std::to_string(n) + ", x^" + std::to_string(n + 1) + ")");
    auto q = r("(x^" + std::to_string(n) + ", x^" + std::to_string(n + 3) + ")");
    EXPECT_EQ(mbe(p, r.all()), p) << n;
    EXPECT_EQ(mbe(q, r.all()), q) << n;
  }
}

TEST(Interiors, AxiomsAndExpansionExamples) {
  Ring25 r(16);
  std::vector<Instance> inst;
  for (const char* text : {"(x^4, x^7)", "(x^6)", "(x^8, x^9)", "(x^10, x^13)"}) inst.push_back({r(text), r.all()});
  inst.push_back({r("(x^10, x^11)"), r("(x^6, x^7)")});
  for (const auto& in : {mbe_interior(), identity_interior()}) expect_all_pass(check_interior_axioms(in, inst), in.name());

  Ring25 big;
  auto i = big("(x^4, x^7)");
  EXPECT_TRUE(is_expansion(mbe_interior(), big("(x^4, x^5)"), i, big.all()));
  auto post = enumerate_postexpansions(mbe_interior(), big("(x^4)"), big.all()).postexpansions;
  EXPECT_NE(std::find(post.begin(), post.end(), i), post.end());
  EXPECT_EQ(mbe_interior()(big("(x^7)"), big.all()), big("(x^9, x^12)"));
}

TEST(Duality, HullLabelsAndAction) {
  Ring25 r;
  ModulePtr e = injective_hull(r.R);
  EXPECT_EQ(e->name(), "E");
  EXPECT_EQ(e->dim(), r.R->dim());
  EXPECT_NO_THROW(e->validate());
  EXPECT_EQ(dual_module(e), r.R);
  EXPECT_EQ(injective_hull(r.R), e);
  const auto& a = *r.a;
  // x^j x^-i is zero exactly when j - i is 0, 2 or at least 4
  for (int j : {0, 2, 4, 5, 6, 7, 9, 12})
    for (int i = 1; i <= 12; ++i) {
      Vec out = e->act_elem(parse_element(a, j == 0 ? "1" : "x^" + std::to_string(j)), elem(e, "x^-" + std::to_string(i)));
      int d = j - i;
      bool vanishes = d == 0 || d == 2 || d >= 4;
      if (vanishes) {
        EXPECT_TRUE(is_zero(out)) << j << " " << i;
        continue;
      }
      std::string want = d == 1 ? "x" : d == 3 ? "x^3" : "x^" + std::to_string(d);
      EXPECT_EQ(out, elem(e, want)) << j << " " << i;
    }
  EXPECT_EQ(annihilator(whole(e), r.R).dim(), 0);
}

TEST(Duality, QuotientDualBasics) {
  Ring25 r;
  ModulePtr e = injective_hull(r.R);
  // (R/m)^v is the socle of E
  EXPECT_EQ(dual_of_quotient(r("m"), r.all()), span_labels(e, {"x^3"}));
  EXPECT_EQ(dual_of_quotient(r.all(), r.all()), zero(e));
  EXPECT_EQ(dual_of_quotient(zero(r.R), r.all()), whole(e));
  for (const char* text : {"(x^4)", "(x^6, x^7)", "(x^11, x^14)"}) {
    auto a = r(text);
    auto d = dual_of_quotient(a, r.all());
    EXPECT_EQ(d.dim(), r.R->dim() - a.dim()) << text;
    EXPECT_EQ(quotient_of_dual(d, r.all()), a) << text;
    EXPECT_EQ(annihilator(d, r.R), a) << text;
  }
  // a proper B goes through its restriction
  auto b = r("(x^6, x^7)"), a = r("(x^10, x^11)");
  auto d = dual_of_quotient(a, b);
  EXPECT_EQ(d.dim(), 4);
  EXPECT_EQ(quotient_of_dual(d, b), a);
  EXPECT_EQ(dual_module(dual_module(restrict_module(b))), restrict_module(b));
  EXPECT_EQ(restrict_module(b), restrict_module(r("(x^6, x^7)")));
}

TEST(Duality, DualOperations) {
  Ring25 r;
  auto mbf = mbf_closure(), mbe = mbe_interior();
  auto mbf_v = dual_op(mbf), mbe_v = dual_op(mbe);
  EXPECT_FALSE(mbf_v.is_closure());
  for (const char* text : {"m", "(x^4)", "(x^5)", "(x^4, x^5)", "(x^4, x^7)", "(x^5, x^8)", "(x^6, x^7)", "(x^7)",
                           "(x^9, x^12)", "(x^11, x^14)"}) {
    auto a = r(text);
    EXPECT_EQ(mbf_v(a, r.all()), mbe(a, r.all())) << text;
    EXPECT_EQ(dual_op(mbf_v)(a, r.all()), mbf(a, r.all())) << text;
    EXPECT_EQ(mbe_v(a, r.all()), mbf(a, r.all())) << text;
    EXPECT_EQ(dual_op(identity_closure())(a, r.all()), identity_interior()(a, r.all())) << text;
  }
  for (const auto& p : duality_pairs(r)) {
    EXPECT_EQ(mbf_v(p.a, p.b), mbe(p.a, p.b)) << p.label;
    expect_all_pass(duality_identities(mbf, mbe, p.a, p.b, 1 << 16), p.label);
  }
}

// M, N, K in E for n = 4, read through their annihilators
TEST(Duality, EModuleTriple) {
  Ring25 r;
  ModulePtr e = injective_hull(r.R);
  auto m = e_window(e, 4), n = e_window(e, 4, {6}), k = e_window(e, 4, {6, 8});
  EXPECT_EQ(annihilator(m, r.R), r("(x^8, x^9)"));
  EXPECT_EQ(annihilator(n, r.R), r("(x^8, x^11)"));
  EXPECT_EQ(annihilator(k, r.R), r("(x^8)"));
  EXPECT_EQ(m, annihilated_by(r("(x^8, x^9)")));
  EXPECT_EQ(dual_of_quotient(m, whole(e)), r("(x^8, x^9)"));

  // (x^8, x^11) is mbf-closed, so it is a prereduction of (x^8, x^9) rather than a
  // reduction, and (x^8) is a reduction of (x^8, x^11): N is a postexpansion of M
  // and K an expansion of N
  auto mbf = mbf_closure();
  EXPECT_FALSE(is_reduction(mbf, r("(x^8, x^11)"), r("(x^8, x^9)"), r.all()));
  auto pre_m = enumerate_prereductions(mbf, r("(x^8, x^9)"), r.all()).prereductions;
  EXPECT_NE(std::find(pre_m.begin(), pre_m.end(), r("(x^8, x^11)")), pre_m.end());
  EXPECT_TRUE(is_reduction(mbf, r("(x^8)"), r("(x^8, x^11)"), r.all()));

  EXPECT_FALSE(is_expansion(mbe_interior(), n, m, whole(e)));
  auto post_m = enumerate_postexpansions(mbe_interior(), m, whole(e)).postexpansions;
  EXPECT_NE(std::find(post_m.begin(), post_m.end(), n), post_m.end());
  EXPECT_TRUE(is_expansion(mbe_interior(), k, n, whole(e)));

  auto pre = enumerate_prereductions(mbf, r("(x^8, x^11)"), r.all()).prereductions;
  auto post = enumerate_postexpansions(mbe_interior(), n, whole(e));
  // and the two lists agree through the annihilator
  std::vector<Submodule> ann;
  for (const auto& c : post.postexpansions) ann.push_back(annihilator(c, r.R));
  std::sort(ann.begin(), ann.end());
  EXPECT_EQ(ann, pre);
}

TEST(Duality, CogeneratorExamples) {
  Ring25 r;
  ModulePtr e = injective_hull(r.R);
  auto mbe = mbe_interior();
  auto ker = [&](int i) { return kernel_preimage(elem(e, "x^-" + std::to_string(i)), r.all()); };
  EXPECT_EQ(ker(6), r("(x^6)"));
  EXPECT_EQ(ker(7), r("(x^7)"));
  EXPECT_EQ(ker(9), r("(x^9)"));

  auto a1 = r("(x^11, x^12)"), a2 = r("(x^11, x^14)");
  EXPECT_EQ(intersect(ker(6), ker(7)), a1);
  EXPECT_EQ(intersect(ker(6), ker(9)), a2);
  EXPECT_EQ(cogenerator_count(a1, r.all()), 2);
  EXPECT_EQ(cogenerator_count(a2, r.all()), 2);

  EXPECT_TRUE(i_independent(mbe, {ker(6), ker(7)}, r.all()));
  EXPECT_FALSE(i_independent(mbe, {ker(6), ker(9)}, r.all()));
  EXPECT_TRUE(ker(6).contains(mbe(ker(9), r.all())));
  EXPECT_FALSE(ker(6).contains(mbe(ker(7), r.all())));

  auto c1 = cogenerator_analysis(mbe, a1, r.all(), 1 << 16);
  EXPECT_EQ(c1.kernels.size(), 2u);
  EXPECT_EQ(intersect(c1.kernels[0], c1.kernels[1]), a1);
  EXPECT_TRUE(c1.strongly_independent);
  auto c2 = cogenerator_analysis(mbe, a2, r.all(), 1 << 16);
  EXPECT_FALSE(c2.strongly_independent);
  EXPECT_FALSE(c2.structure.applicable);
}

TEST(Duality, SimpleQuotientCospread) {
  Ring25 r;
  EXPECT_EQ(cogenerator_count(r("m"), r.all()), 1);
  // under mbe, R is itself an expansion of m; under the identity, m is cobasic
  auto mbe = enumerate_expansions(mbe_interior(), r("m"), r.all(), 1 << 16);
  ASSERT_TRUE(mbe.cospread);
  EXPECT_EQ(*mbe.cospread, 0);
  auto id = enumerate_expansions(identity_interior(), r("m"), r.all(), 1 << 16);
  EXPECT_TRUE(id.cobasic);
  ASSERT_TRUE(id.cospread);
  EXPECT_EQ(*id.cospread, 1);
}

// i-independence of the kernels matches cl-independence of the functionals
TEST(Duality, IndependenceMatchesDualSide) {
  Ring25 r;
  long compared = 0;
  for (const char* text : {"(x^11, x^12)", "(x^11, x^14)", "(x^8, x^9)", "(x^8, x^11)", "(x^6, x^7)", "(x^10, x^13)"}) {
    auto a = r(text);
    auto nd = dual_of_quotient(a, r.all());
    auto gens = minimal_generators(nd);
    const Fp& f = r.R->field();
    for (const auto& basis : all_bases(f, static_cast<int>(gens.size()))) {
      std::vector<Vec> gs;
      std::vector<Submodule> ks;
      for (const auto& c : basis) {
        gs.push_back(combine(f, nd.mod->dim(), c, gens));
        ks.push_back(kernel_preimage(gs.back(), r.all()));
      }
      ++compared;
      EXPECT_EQ(i_independent(mbe_interior(), ks, r.all()), cl_independent(mbf_closure(), gs, whole(nd.mod))) << text;
    }
  }
  EXPECT_GT(compared, 6);
}

TEST(Duality, Correspondences) {
  Ring25 r;
  for (const auto& p : duality_pairs(r)) {
    ASSERT_LE(p.b.dim() - p.a.dim(), 4) << p.label;
    expect_all_pass(correspondence_check(mbf_closure(), mbe_interior(), p.a, p.b, 1 << 16), p.label);
  }
}

TEST(Duality, SumIntersect) {
  Ring25 r;
  auto v = sum_intersect_duality_check(r.all(), {r("(x^6)"), r("(x^7)"), r("(x^4, x^9)")});
  EXPECT_TRUE(v.pass) << v.detail;
  EXPECT_FALSE(sum_intersect_duality_check(r.all(), {}).applicable);
}

TEST(Suites, NonexpansionSuite) {
  Ring25 r;
  for (const auto& p : duality_pairs(r))
    for (const auto& in : {mbe_interior(), identity_interior()}) {
      auto rs = nonexpansion_suite(in, p.a, p.b, 1 << 16);
      expect_all_pass(rs, in.name() + " " + p.label);
    }
}

// The literal reading of item 7 and the cospread offset of one both fail on
// these fixtures; the witnesses are frozen here.
TEST(Suites, NonexpansionDisputedFindings) {
  Ring25 r;
  const std::string literal = "minimal A' = (A'_i meet (A :_C m)_i)_i + A for every non-expansion C";
  const std::string offset = "cospread of a postexpansion is one more than that of A";
  std::vector<std::string> failing;
  for (const auto& p : duality_pairs(r))
    for (const auto& in : {mbe_interior(), identity_interior()})
      for (const auto& c : nonexpansion_suite(in, p.a, p.b, 1 << 16))
        if (!c.pass) {
          EXPECT_TRUE(c.disputed) << c.name;
          failing.push_back(in.name() + " " + p.label + ": " + (c.name == literal ? "literal" : c.name == offset ? "offset" : c.name));
        }
  std::sort(failing.begin(), failing.end());
  EXPECT_EQ(failing, (std::vector<std::string>{
                         "id (x^10, x^11) in (x^6, x^7): literal",
                         "id (x^10, x^11) in (x^6, x^7): offset",
                         "id (x^4, x^7) in R: literal",
                         "id (x^4, x^7) in R: offset",
                         "id (x^6 + x^7, x^9) in (x^6, x^7): offset",
                         "id (x^9, x^12) in (x^6, x^9): offset",
                         "id M in the socle of (x^12, x^13) in E: literal",
                         "id M in the socle of (x^12, x^13) in E: offset",
                         "mbe (x^10, x^11) in (x^6, x^7): literal",
                         "mbe (x^10, x^11) in (x^6, x^7): offset",
                         "mbe (x^4, x^7) in R: offset",
                         "mbe (x^9, x^12) in (x^6, x^9): offset",
                         "mbe M in the socle of (x^12, x^13) in E: literal",
                         "mbe M in the socle of (x^12, x^13) in E: offset",
                     }));

  // m is the one postexpansion of (x^4, x^7) in R; R is an expansion of m, so
  // its cospread is 0 while that of (x^4, x^7) is 1
  auto post = enumerate_postexpansions(mbe_interior(), r("(x^4, x^7)"), r.all()).postexpansions;
  ASSERT_EQ(post.size(), 1u);
  EXPECT_EQ(post[0], r("m"));
  EXPECT_EQ(enumerate_expansions(mbe_interior(), r("(x^4, x^7)"), r.all(), 1 << 16).cospread, 1);
  EXPECT_EQ(enumerate_expansions(mbe_interior(), r("m"), r.all(), 1 << 16).cospread, 0);
}

TEST(Suites, InteriorComparison) {
  Ring25 r;
  for (const auto& p : duality_pairs(r)) {
    auto rs = interior_comparison_suite(mbe_interior(), identity_interior(), p.a, p.b, 1 << 16);
    ASSERT_FALSE(rs.empty());
    EXPECT_TRUE(rs.front().pass) << p.label;
    expect_all_pass(rs, p.label);
  }
}
