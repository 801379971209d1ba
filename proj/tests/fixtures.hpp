#pragma once

#include "closurelab/algebra.hpp"
#include "closurelab/expr.hpp"

namespace fixtures {

using namespace closurelab;

// k[[x^2,x^5]] truncated at degree D over F_p
struct Ring25 {
  std::shared_ptr<const LocalAlgebra> a;
  ModulePtr R;

  explicit Ring25(int D = 24, int p = 2) : a(LocalAlgebra::semigroup(NumericalSemigroup({2, 5}), p, D)), R(Module::regular(a)) {}
  Submodule operator()(const std::string& text) const { return parse_ideal(R, text); }
  Submodule all() const { return whole(R); }
  // every x^s with s >= t
  Submodule tail(int t) const {
    std::vector<Vec> gens;
    for (int i = 0; i < a->dim(); ++i)
      if (a->degree(i) >= t) gens.push_back(a->basis_vector(i));
    return generate(R, gens);
  }
};

}  // namespace fixtures
