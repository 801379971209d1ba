#include <gtest/gtest.h>

#include "closurelab/reductions.hpp"
#include "fixtures.hpp"

using namespace closurelab;
using fixtures::Ring25;

namespace {

const std::string kUnderMinimal = "precore inside core when every prereduction sits under a minimal reduction";

void expect_all_pass(const std::vector<CheckResult>& rs, const std::string& label) {
  for (const auto& r : rs)
    if (!r.disputed) EXPECT_TRUE(r.pass) << label << ": " << r.name << " -- " << r.witness;
  EXPECT_TRUE(all_pass(rs)) << label;
}

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::runtime_error("no check " + name);
}

long total_instances(const std::vector<CheckResult>& rs) {
  long n = 0;
  for (const auto& r : rs) n += r.instances;
  return n;
}

const char* kIdeals[] = {"(x^4)", "(x^4, x^7)", "(x^4, x^5)", "(x^6, x^7)", "(x^5, x^8)", "(x^6, x^9)", "m"};

}  // namespace

TEST(Suites, NonreductionSuiteSemigroup) {
  Ring25 r;
  Submodule floor = r.tail(14);
  for (const auto& cl : {mbf_closure(), ord_closure(), integral_closure()})
    for (const char* text : kIdeals) {
      auto rs = nonreduction_suite(cl, r(text), r.all(), intersect(floor, r(text)), 1 << 20);
      expect_all_pass(rs, cl.name() + " " + text);
      EXPECT_GT(total_instances(rs), 0) << cl.name() << " " << text;
    }
}

TEST(Suites, NonreductionSuiteWholeLatticeSmallRing) {
  Ring25 r(16);
  for (const auto& cl : {mbf_closure(), ord_closure(), integral_closure()})
    for (const char* text : {"(x^6, x^7)", "(x^8)", "(x^8, x^9)"}) {
      auto rs = nonreduction_suite(cl, r(text), r.all(), zero(r.R), 1 << 20);
      expect_all_pass(rs, cl.name() + " " + text);
    }
}

TEST(Suites, ComparisonMbfBelowIntegral) {
  Ring25 r;
  Submodule floor = r.tail(14);
  for (const char* text : kIdeals) {
    auto rs = comparison_suite(mbf_closure(), integral_closure(), r(text), r.all(), intersect(floor, r(text)), 1 << 20);
    ASSERT_FALSE(rs.empty());
    EXPECT_TRUE(rs.front().pass) << text << ": " << rs.front().witness;
    expect_all_pass(rs, text);
  }
}

// Under the m-adic order closure, (x^4, x^7) has the single prereduction
// (x^6, x^9), which lies in the minimal reduction (x^4); yet x^6 is not in the
// minimal reduction (x^7), so the precore is not inside the core.
TEST(Suites, PrecoreUnderMinimalReductionCounterexample) {
  Ring25 r;
  Submodule floor = r.tail(14);
  std::vector<std::string> failing;
  for (const auto& cl : {mbf_closure(), ord_closure(), integral_closure()})
    for (const char* text : kIdeals) {
      auto rs = nonreduction_suite(cl, r(text), r.all(), intersect(floor, r(text)), 1 << 20);
      const auto& c = find(rs, kUnderMinimal);
      if (!c.pass) failing.push_back(cl.name() + " " + text);
    }
  EXPECT_EQ(failing, (std::vector<std::string>{"ord (x^4, x^7)", "ord (x^6, x^9)", "ord m"}));

  auto n = r("(x^4, x^7)");
  auto pre = enumerate_prereductions(ord_closure(), n, r.all());
  ASSERT_EQ(pre.prereductions.size(), 1u);
  EXPECT_EQ(pre.prereductions[0], r("(x^6, x^9)"));
  EXPECT_TRUE(is_reduction(ord_closure(), r("(x^4)"), n, r.all()));
  EXPECT_TRUE(is_reduction(ord_closure(), r("(x^7)"), n, r.all()));
  EXPECT_TRUE(r("(x^4)").contains(r("(x^6, x^9)")));
  EXPECT_FALSE(r("(x^7)").contains(r("(x^6)")));
}

// (x^4) and its one prereduction (x^6, x^9) both have principal minimal
// reductions, so the claimed offset of one in the spread fails.
TEST(Suites, SpreadOffsetCounterexample) {
  Ring25 r;
  auto rn = enumerate_reductions(mbf_closure(), r("(x^4)"), r.all());
  auto ra = enumerate_reductions(mbf_closure(), r("(x^6, x^9)"), r.all());
  ASSERT_TRUE(rn.spread && ra.spread);
  EXPECT_EQ(*rn.spread, 1);
  EXPECT_EQ(*ra.spread, 1);
  EXPECT_TRUE(is_reduction(mbf_closure(), r("(x^6)"), r("(x^6, x^9)"), r.all()));

  auto rs = nonreduction_suite(mbf_closure(), r("(x^4)"), r.all(), intersect(r.tail(14), r("(x^4)")), 1 << 20);
  const auto& c = find(rs, "spread of N is one more than the spread of each prereduction");
  EXPECT_TRUE(c.disputed);
  EXPECT_FALSE(c.pass);
  EXPECT_TRUE(all_pass(rs));
}
