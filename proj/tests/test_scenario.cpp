#include <gtest/gtest.h>

#include <cstdlib>

#include "closurelab/scenario.hpp"

using namespace closurelab;

namespace {

const std::string kRoot = CLOSURELAB_SOURCE_DIR;

RunOutput run_text(const std::string& text, RunOptions opt = {}) {
  return run_scenario(parse_scenario(text, "inline", kRoot + "/scenarios"), opt);
}

const char* kSuite =
    "ring semigroup 2 5 p 2 D 24\n"
    "core-suite mbf (x^4, x^7)\n"
    "  expect precore = (x^6, x^7)\n"
    "reductions mbf (x^4, x^5)\n"
    "closure ord (x^4)\n";

struct EnvGuard {
  std::string name;
  EnvGuard(const char* n, const char* v) : name(n) { setenv(n, v, 1); }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

}  // namespace

TEST(ScenarioParse, MalformedInputThrows) {
  EXPECT_THROW(parse_scenario("closure mbf (x^4)\n", "x"), ScenarioError);  // no ring
  EXPECT_THROW(parse_scenario("ring semigroup 2 5 D 24\nfrobnicate (x^4)\n", "x"), ScenarioError);
  EXPECT_THROW(parse_scenario("ring semigroup 2 5 D 24\nversion 7\n", "x"), ScenarioError);
  EXPECT_THROW(parse_scenario("ring semigroup 2 5 D 24\nideal m = (x^2)\n", "x"), ScenarioError);
  EXPECT_THROW(parse_scenario("ring semigroup 2 5 D 24\n  expect value = 0\n", "x"), ScenarioError);
}

TEST(ScenarioParse, CommentsAndContinuations) {
  auto s = parse_scenario(
      "# header\nring semigroup 2 5 p 3 D 20\nideal I = (x^4, x^7)  # trailing\n"
      "closure mbf I\n  expect value = (x^4, x^7)\n",
      "c");
  EXPECT_EQ(s.ring.p, 3);
  EXPECT_EQ(s.ring.D, 20);
  ASSERT_EQ(s.decls.size(), 1u);
  ASSERT_EQ(s.tasks.size(), 1u);
  EXPECT_EQ(s.tasks[0].args, (std::vector<std::string>{"mbf", "I"}));
  ASSERT_EQ(s.tasks[0].expects.size(), 1u);
  EXPECT_EQ(s.tasks[0].expects[0].first, "value");
}

TEST(ScenarioRun, UnknownClosureIsAnError) {
  auto r = run_text("ring semigroup 2 5 D 24\nclosure sharp (x^4)\n");
  EXPECT_EQ(r.report.tasks.at(0).status, "error");
  EXPECT_EQ(r.report.exit_code(), 2);
}

TEST(ScenarioRun, UndeclaredNameIsAnError) {
  auto r = run_text("ring semigroup 2 5 D 24\nclosure mbf Q\n");
  EXPECT_EQ(r.report.tasks.at(0).status, "error");
  EXPECT_FALSE(r.report.tasks.at(0).witness.empty());
}

TEST(ScenarioRun, EmptyScenarioExitsZero) {
  auto r = run_scenario(load_scenario(kRoot + "/scenarios/empty.scn"));
  EXPECT_TRUE(r.report.tasks.empty());
  EXPECT_EQ(r.report.exit_code(), 0);
  EXPECT_EQ(r.report.ring["D_source"], "auto");
}

TEST(ScenarioRun, NegativeControlFailsWithWitness) {
  auto s = load_scenario(kRoot + "/scenarios/negative_control.scn");
  EXPECT_EQ(s.expect_exit, 1);
  auto r = run_scenario(s);
  EXPECT_EQ(r.report.exit_code(), 1);
  EXPECT_EQ(r.report.tasks.at(0).witness, "value: expected (x^4, x^5), got (x^4, x^7)");
}

TEST(ScenarioRun, InfoWithoutExpectations) {
  auto r = run_text("ring semigroup 2 5 D 24\nclosure mbf (x^4)\n");
  EXPECT_EQ(r.report.tasks.at(0).status, "info");
  EXPECT_EQ(r.report.exit_code(), 0);
}

TEST(ScenarioRun, TruncationSocleIsReportedSeparately) {
  auto r = run_text("ring quotient vars x y rel x^2*y^2 D 10\nclosure mbf (x*y)\n  expect value = (x*y)\n");
  const auto& t = r.report.tasks.at(0);
  EXPECT_EQ(t.status, "pass") << t.witness;
  EXPECT_FALSE(t.fields["truncation_socle"].empty());
}

TEST(Report, JsonRoundTrip) {
  auto r = run_text(kSuite).report;
  auto back = report_from_json(ojson::parse(emit_json(r)));
  EXPECT_EQ(back, r);
  EXPECT_EQ(emit_json(back), emit_json(r));
}

TEST(Report, RejectsForeignJson) {
  EXPECT_THROW(report_from_json(ojson::parse(R"({"schema":"other"})")), std::runtime_error);
  auto j = to_json(run_text("ring semigroup 2 5 D 24\n").report);
  j["version"] = 99;
  EXPECT_THROW(report_from_json(j), std::runtime_error);
}

TEST(Report, DeterministicAcrossJobCounts) {
  RunOptions one, many;
  one.jobs = 1;
  many.jobs = 4;
  auto a = emit_json(run_text(kSuite, one).report);
  auto b = emit_json(run_text(kSuite, many).report);
  EXPECT_EQ(a, b);
}

TEST(Report, MarkdownTables) {
  auto md = emit_markdown(run_text(kSuite).report);
  EXPECT_NE(md.find("| precore | (x^6, x^7)"), std::string::npos) << md;
  EXPECT_NE(md.find("## 1. core-suite mbf (x^4, x^7): pass"), std::string::npos) << md;
}

TEST(Sampling, WatermarkAndFlags) {
  RunOptions opt;
  opt.sample = 5;
  opt.seed = 7;
  auto r = run_text(kSuite, opt).report;
  EXPECT_EQ(r.enumeration, "sampled: 5 lifts per enumeration, seed 7");
  EXPECT_TRUE(r.tasks.at(1).sampled);
  EXPECT_FALSE(r.tasks.at(2).sampled);
  // same seed, same report
  EXPECT_EQ(emit_json(r), emit_json(run_text(kSuite, opt).report));
}

TEST(Sampling, EnumerationBoundIsAnError) {
  EnvGuard env("CLOSURE_LAB_MAX_ENUM", "1");
  auto r = run_text("ring semigroup 2 5 D 24\nreductions mbf (x^4, x^5)\n").report;
  EXPECT_EQ(r.tasks.at(0).status, "error");
  EXPECT_NE(r.tasks.at(0).witness.find("--sample"), std::string::npos);
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Certificate, DetectsChangedGenerators) {
  auto a = run_text("ring semigroup 2 5 D 24\nclosure mbf (x^4)\n").report;
  auto b = run_text("ring semigroup 2 5 D 24\nclosure id (x^4)\n").report;
  EXPECT_TRUE(compare_submodule_fields(a, a).empty());
  EXPECT_FALSE(compare_submodule_fields(a, b).empty());
}

TEST(Truncation, AutoAndOverride) {
  auto s = parse_scenario("ring semigroup 2 5 D auto\nclosure mbf (x^4, x^7)\n", "a");
  int D = resolve_truncation(s);
  EXPECT_GE(D, 10);
  RunOptions opt;
  opt.truncation = 2 * D;
  auto r = run_scenario(s, opt).report;
  EXPECT_EQ(r.ring["D"], 2 * D);
  EXPECT_EQ(r.ring["D_source"], "override");
  EXPECT_TRUE(compare_submodule_fields(run_scenario(s).report, r).empty());
}
