#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "closurelab/duality.hpp"
#include "closurelab/render.hpp"
#include "closurelab/scenario.hpp"
#include "fixtures.hpp"

using namespace closurelab;
using Points = std::set<LatticePoint>;

namespace {

const std::string kRoot = CLOSURELAB_SOURCE_DIR;

Points box(int x0, int x1, int y0, int y1) {
  Points p;
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) p.insert({x, y});
  return p;
}

Points operator+(Points a, const Points& b) {
  a.insert(b.begin(), b.end());
  return a;
}

Points row(std::initializer_list<int> xs, int y) {
  Points p;
  for (int x : xs) p.insert({x, y});
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Figures {
  RunOutput out;
  Figures() {
    RunOptions opt;
    opt.only_lattices = true;
    out = run_scenario(load_scenario(kRoot + "/scenarios/T_figures.scn"), opt);
  }
  Points layer(const std::string& figure, size_t i) const {
    for (const auto& t : out.report.tasks)
      if (t.args == figure) {
        Points p;
        for (const auto& q : t.fields["layers"][i]["points"]) p.insert({q[0].get<int>(), q[1].get<int>()});
        return p;
      }
    throw std::runtime_error("no figure " + figure);
  }
  std::string source(const std::string& figure, size_t i) const {
    for (const auto& t : out.report.tasks)
      if (t.args == figure) return t.fields["layers"][i]["source"].get<std::string>();
    return "";
  }
};

}  // namespace

// point sets read off the published pictures
TEST(Render, IdealILayers) {
  Figures f;
  EXPECT_EQ(f.layer("lattice_I", 0), box(4, 9, 1, 6) + row({4, 6, 8, 9}, 0));
  EXPECT_EQ(f.layer("lattice_I", 1), row({7}, 0));
  EXPECT_EQ(f.layer("lattice_I", 2), row({5, 7}, 0));
  EXPECT_EQ(f.source("lattice_I", 1), "computed");
  EXPECT_EQ(f.source("lattice_I", 2), "paper-table");
}

TEST(Render, IdealJLayers) {
  Figures f;
  EXPECT_EQ(f.layer("lattice_J", 0), box(4, 9, 1, 6) + box(0, 3, 2, 6) + row({4, 5, 6, 7, 8, 9}, 0));
  EXPECT_EQ(f.layer("lattice_J", 1), row({2, 3}, 1));
  EXPECT_EQ(f.layer("lattice_J", 2), row({2, 3}, 2) + box(4, 9, 1, 6) + box(0, 3, 3, 6) + row({6, 7, 8, 9}, 0));
}

TEST(Render, ZeroIdealIsBaseOnly) {
  Figures f;
  EXPECT_TRUE(f.layer("zero", 0).empty());
  const std::string& svg = f.out.svgs.at("zero.svg");
  EXPECT_EQ(svg.find("fill=\"red\" data-x"), std::string::npos);
}

TEST(Render, GoldenSvgs) {
  Figures f;
  for (const char* name : {"lattice_I.svg", "lattice_J.svg", "zero.svg"})
    EXPECT_EQ(f.out.svgs.at(name), slurp(kRoot + "/tests/golden/" + name)) << name;
  // a second run renders the same bytes
  Figures g;
  EXPECT_EQ(f.out.svgs, g.out.svgs);
}

TEST(Render, BaseLayerSkipsMissingMonomials) {
  auto t = LocalAlgebra::t_ring(2, 24);
  auto pic = lattice_frame(t, 9, 6, "T");
  Points base(pic.ring_points.begin(), pic.ring_points.end());
  Points expected = box(0, 9, 0, 6);
  expected.erase({1, 0});
  expected.erase({3, 0});
  EXPECT_EQ(base, expected);
}

TEST(Render, OneVariableRing) {
  fixtures::Ring25 r;
  auto pic = lattice_frame(r.a, 9, 6, "R");
  EXPECT_EQ(pic.ymax, 0);
  EXPECT_EQ(Points(pic.ring_points.begin(), pic.ring_points.end()), row({0, 2, 4, 5, 6, 7, 8, 9}, 0));
  EXPECT_EQ(monomial_points(r("(x^4, x^7)"), 9, 0), (std::vector<LatticePoint>{{4, 0}, {6, 0}, {7, 0}, {8, 0}, {9, 0}}));
  auto ascii = render_ascii(pic);
  EXPECT_NE(ascii.find(" 0  o  .  o  .  o  o  o  o  o  o"), std::string::npos) << ascii;
}

TEST(Render, RejectsNonRegularModules) {
  fixtures::Ring25 r;
  auto E = injective_hull(r.R);
  EXPECT_THROW(monomial_points(whole(E), 9, 0), std::exception);
}
