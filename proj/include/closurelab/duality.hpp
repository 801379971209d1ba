#pragma once

#include <optional>

#include "closurelab/interiors.hpp"
#include "closurelab/reductions.hpp"

namespace closurelab {

// Linear dual with the contragredient action (r f)(u) = f(r u), on the dual
// basis. Cached: dual_module(dual_module(M)) is M itself.
ModulePtr dual_module(const ModulePtr& m);
// Uncached construction, for checking the double dual.
ModulePtr contragredient(const ModulePtr& m);

// B as a module on the basis of its echelon rows; the whole ambient gives the
// ambient back. Cached per (ambient, B).
ModulePtr restrict_module(const Submodule& b);
Submodule to_restricted(const Submodule& a, const Submodule& b);
Submodule from_restricted(const Submodule& a, const Submodule& b);

// Functionals vanishing on a submodule, and back. For L inside dual_module(M),
// annihilated_by(L) is the largest submodule on which every f in L vanishes.
Submodule perp_in_dual(const Submodule& a);
Submodule annihilated_by(const Submodule& l);

// (B/A)^v as a submodule of B^v = dual_module(restrict_module(B)), and back:
// quotient_of_dual(L, B) is the C with (B/C)^v = L.
Submodule dual_of_quotient(const Submodule& a, const Submodule& b);
Submodule quotient_of_dual(const Submodule& l, const Submodule& b);

// p^v(A, B) = (B^v / p((B/A)^v, B^v))^v, re-embedded in B; the kind flips.
PairOp dual_op(const PairOp& p);

// pi^{-1}(ker g) for g in (B/A)^v given in B^v coordinates.
Submodule kernel_preimage(const Vec& g, const Submodule& b);

// ---- E = R^v for a semigroup ring, with labels x^{F-s} for the dual of x^s
ModulePtr injective_hull(const ModulePtr& ring);

// ---- expansions

struct ExpansionReport {
  std::string interior;
  std::vector<Submodule> expansions;
  std::vector<Submodule> maximal;
  Submodule hull;
  bool cobasic = false;       // A is its only expansion
  std::optional<int> cospread;  // cogenerators of B/C for maximal expansions C, when uniform
  long visited = 0;
};
ExpansionReport enumerate_expansions(const PairOp& in, const Submodule& a, const Submodule& b, long bound);

struct PostexpansionReport {
  std::string interior;
  std::vector<Submodule> postexpansions;
  std::optional<Submodule> postcore, posthull;
  long visited = 0;
};
// Minimal non-expansions; they sit inside (A :_B m), so only A + V for
// subspaces V of (A :_B m)/A are tried.
PostexpansionReport enumerate_postexpansions(const PairOp& in, const Submodule& a, const Submodule& b);

// number of cogenerators of B/A, the socle dimension of B/A
int cogenerator_count(const Submodule& a, const Submodule& b);

struct CogeneratorAnalysis {
  std::vector<Submodule> kernels;  // pi^{-1}(ker g) for the canonical minimal cogenerators
  bool independent = false;
  bool strongly_independent = false;
  std::optional<int> cospread;
  Verdict structure;  // postexpansions against the intersection form
};
CogeneratorAnalysis cogenerator_analysis(const PairOp& in, const Submodule& a, const Submodule& b, long bound);
bool i_independent(const PairOp& in, const std::vector<Submodule>& kernels, const Submodule& b);

// ---- checks

// Lemma-level identities on every C with A <= C <= B: p^v against the given
// dual operation on both sides, double dual, sum/intersection and annihilators.
std::vector<CheckResult> duality_identities(const PairOp& cl, const PairOp& in, const Submodule& a,
                                            const Submodule& b, long bound);
// (B / sum C_i)^v = meet (B/C_i)^v and (B / meet C_i)^v = sum (B/C_i)^v.
Verdict sum_intersect_duality_check(const Submodule& b, const std::vector<Submodule>& family);
// Bijections C -> (B/C)^v: expansions to reductions, postexpansions to
// prereductions, non-expansions to non-reductions, each order reversing.
std::vector<CheckResult> correspondence_check(const PairOp& cl, const PairOp& in, const Submodule& a,
                                              const Submodule& b, long bound);
// Non-expansion property suite over every C with A <= C <= B.
std::vector<CheckResult> nonexpansion_suite(const PairOp& in, const Submodule& a, const Submodule& b, long bound);
// Comparison suite for in1 <= in2 over the same universe.
std::vector<CheckResult> interior_comparison_suite(const PairOp& in1, const PairOp& in2, const Submodule& a,
                                                   const Submodule& b, long bound);

}  // namespace closurelab
