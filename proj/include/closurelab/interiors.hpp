#pragma once

#include "closurelab/closures.hpp"

namespace closurelab {

// A^B_mbe = m (A :_B m)
PairOp mbe_interior();
PairOp identity_interior();

// Interior axioms over instances (A, B); the order and Nakayama checks run
// over every submodule C with A <= C <= B.
std::vector<CheckResult> check_interior_axioms(const PairOp& in, const std::vector<Instance>& instances,
                                               long bound = 1 << 16);

bool is_expansion(const PairOp& in, const Submodule& c, const Submodule& a, const Submodule& b);

}  // namespace closurelab
