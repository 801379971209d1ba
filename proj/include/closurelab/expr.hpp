#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "closurelab/algebra.hpp"

namespace closurelab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ring elements: terms c*x^a*y^b joined by + or -, e.g. "x^4 + x^7", "2*x^2*y".
Vec parse_element(const LocalAlgebra& a, const std::string& text);

// Ideal expressions: (g1, g2, ...), m, R, 0, or a declared name; combined
// with * (product), + (sum) and & (intersection), * binding tightest.
Submodule parse_ideal(const ModulePtr& ring, const std::string& text,
                      const std::map<std::string, Submodule>& named = {});

std::string format_element(const Module& m, const Vec& v);
// "(x^4, x^7)" from the canonical minimal generators
std::string format_submodule(const Submodule& s);
std::vector<std::string> generator_strings(const Submodule& s);

}  // namespace closurelab
