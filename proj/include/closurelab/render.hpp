#pragma once

#include <optional>
#include <utility>

#include "closurelab/algebra.hpp"

namespace closurelab {

using LatticePoint = std::pair<int, int>;  // (x exponent, y exponent)

struct LatticeLayer {
  enum class Kind { Fill, Ring };
  std::string name;
  Kind kind = Kind::Fill;
  std::string color;
  std::string source = "computed";  // or "paper-table"
  std::vector<LatticePoint> points;  // sorted
};

// Later fill layers paint over earlier ones; ring layers draw a larger circle.
struct LatticePicture {
  std::string title;
  int xmax = 9, ymax = 6;
  std::vector<LatticePoint> ring_points;  // monomials of the algebra inside the window
  std::string base_color = "cyan";
  std::vector<LatticeLayer> layers;
};

// Window points whose monomial lies in s and, if given, not in minus.
// Throws for algebras with more than two variables.
std::vector<LatticePoint> monomial_points(const Submodule& s, int xmax, int ymax,
                                          const std::optional<Submodule>& minus = {});
LatticePicture lattice_frame(const AlgebraPtr& a, int xmax, int ymax, std::string title);

std::string render_svg(const LatticePicture& p);
// one cell per point: '.' outside the algebra, 'o' base, the layer's letter
// for fills (first letter of its color), brackets for rings; y grows upward
std::string render_ascii(const LatticePicture& p);

}  // namespace closurelab
