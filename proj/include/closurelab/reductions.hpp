#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "closurelab/closures.hpp"

namespace closurelab {

struct EnumOptions {
  long bound = default_enumeration_bound();
  long sample = 0;  // > 0: random sample of this many lifts instead of the exhaustive walk
  uint64_t seed = 1;
};

enum class EnumMode { Exhaustive, Lifted, Sampled };
std::string mode_name(EnumMode m);

struct EnumStats {
  long visited = 0;
  bool sampled = false;
};

// Visits every submodule L = J + R{l_1..l_t} whose generators l_s lift a
// linearly independent family of N/(mN + J), each such L exactly once. The
// lifts are refined one m-adic layer at a time, with offsets taken from a
// complement of what the current generators already reach in that layer.
void for_each_lifted(const Submodule& n, const Submodule& j, const EnumOptions& opt, EnumStats& stats,
                     const std::function<void(const Submodule& l, int t)>& visit);

struct ReductionReport {
  std::string closure;
  std::vector<Submodule> reductions;  // lifted reductions
  std::vector<Submodule> minimal;
  Submodule core;
  std::optional<int> spread;  // empty when non-uniform
  bool basic = false;
  EnumMode mode = EnumMode::Lifted;
  long visited = 0;
};

// Reductions L of N in M; with a base J, only L containing J (reductions of N modulo J).
ReductionReport enumerate_reductions(const PairOp& cl, const Submodule& n, const Submodule& m,
                                     const EnumOptions& opt = {}, const std::optional<Submodule>& base = {});

struct PrereductionReport {
  std::string closure;
  std::vector<Submodule> prereductions;
  std::optional<Submodule> precore, prehull;  // empty when there are no prereductions
  long visited = 0;
};

// Maximal non-reductions of N in M; with a base J, only among submodules containing J.
PrereductionReport enumerate_prereductions(const PairOp& cl, const Submodule& n, const Submodule& m,
                                           const std::optional<Submodule>& base = {});

// Naive oracle: every subspace of N, kept if it is a submodule and a reduction.
std::vector<Submodule> naive_reductions(const PairOp& cl, const Submodule& n, const Submodule& m);

// All submodules of N that are not reductions, via the cover walk.
std::vector<Submodule> nonreductions(const PairOp& cl, const Submodule& n, const Submodule& m, long bound);

std::vector<Submodule> maximal_elements(const std::vector<Submodule>& s);
std::vector<Submodule> minimal_elements(const std::vector<Submodule>& s);
Submodule intersect_all(const std::vector<Submodule>& s, const Submodule& empty_value);
Submodule sum_all(const std::vector<Submodule>& s, const Submodule& empty_value);

bool cl_independent(const PairOp& cl, const std::vector<Vec>& elements, const Submodule& m);
// every basis of N/mN, lifted through the canonical generators, is independent
bool strongly_cl_independent(const PairOp& cl, const Submodule& n, const Submodule& m);

enum class CoverKind { NotCover, ClCover, NonClCover };
std::string cover_name(CoverKind k);
CoverKind cover_classify(const PairOp& cl, const Submodule& k, const Submodule& n, const Submodule& m);

struct Verdict {
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

// For strongly independent N: prereductions are exactly (y_1..y_{k-1}) + m y_k.
Verdict basic_structure_check(const PairOp& cl, const Submodule& n, const Submodule& m);
// union of prereductions is N iff N has no cyclic reduction (cyclic over the base, if given)
Verdict union_prereductions_check(const PairOp& cl, const Submodule& n, const Submodule& m,
                                  const std::optional<Submodule>& base = {});

// Non-reduction property suite on one pair. The universe is every submodule L
// with floor <= L <= N (floor = 0 gives all of them); each claim is checked on
// every applicable tuple drawn from it.
std::vector<CheckResult> nonreduction_suite(const PairOp& cl, const Submodule& n, const Submodule& m,
                                            const Submodule& floor, long bound);

// Comparison suite for cl1 <= cl2 on the same universe; the inequality itself
// is the first check and the rest are marked not applicable when it fails.
std::vector<CheckResult> comparison_suite(const PairOp& cl1, const PairOp& cl2, const Submodule& n,
                                          const Submodule& m, const Submodule& floor, long bound);

// Every basis of F_p^r up to ordering, as coefficient rows.
std::vector<std::vector<Vec>> all_bases(Fp f, int r);

}  // namespace closurelab
