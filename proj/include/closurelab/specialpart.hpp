#pragma once

#include "closurelab/reductions.hpp"

namespace closurelab {

struct SpecialPartViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// I -> I^clsp for ideals of one ring, tied to its closure. Evaluation asserts
// the sandwich mI <= I^clsp <= I^cl and throws SpecialPartViolation otherwise.
class SpecialPartOp {
 public:
  using Fn = std::function<Submodule(const Submodule& i)>;
  SpecialPartOp(std::string name, PairOp parent, Fn fn, int n_max = 0);

  const std::string& name() const { return name_; }
  const PairOp& parent() const { return parent_; }
  int n_max() const { return n_max_; }
  Submodule operator()(const Submodule& i) const;
  // without the sandwich assertion, for the axiom checker
  Submodule raw(const Submodule& i) const { return fn_(i); }
  Submodule closure(const Submodule& i) const { return parent_(i, whole(i.mod)); }

 private:
  std::string name_;
  PairOp parent_;
  Fn fn_;
  int n_max_ = 0;
};

struct SpecialPartResult {
  Submodule sp;
  int threshold = 0;      // sp = every z with v(z) >= threshold
  bool stabilized = false;  // unchanged for 3 consecutive n; otherwise sp is a lower bound
  int settled_at = 0;     // first n at which the threshold reached its final value
};

// {z : z^n in (m I^n)^- for some n <= n_max} on the semigroup backend, by
// valuations: v(z^n) = n v(z) and (m I^n)^- = {v >= v(m) + n v(I)}.
SpecialPartResult integral_special_part(const Submodule& i, int n_max = 12);

SpecialPartOp integral_sp(int n_max = 12);
// I -> mI, a valid special part for any Nakayama closure as far as axioms 1, 2, 4 go
SpecialPartOp trivial_sp(const PairOp& cl);
// I -> I^cl, which satisfies the sandwich but breaks axiom 4
SpecialPartOp closure_as_sp(const PairOp& cl);

// Axioms 1-4 and the derived facts (monotonicity, mI = I meet I^clsp for
// cl-independent I, replacement by special-part elements, extension to a
// minimal reduction modulo J) over every J with floor <= J <= I.
std::vector<CheckResult> check_specialpart_axioms(const SpecialPartOp& sp, const std::vector<Submodule>& ideals,
                                                  const Submodule& floor, long bound = 1 << 16);

// I^cl = I + I^clsp for strongly cl-independent I, and the sum is direct
// modulo mI when the generators are cl-independent.
Verdict special_decomposition_check(const Submodule& i, const SpecialPartOp& sp);

// The hypotheses the classification uses, checked on the instance: I closed,
// the sandwich and axiom 3 at I, uniform spread, and every minimal reduction
// strongly independent with a special part decomposition. Empty when they hold.
std::optional<std::string> specialpart_hypotheses(const Submodule& i, const SpecialPartOp& sp);

// cl-closed K with J <= K <= I and I/K simple. Throws if J or I is not closed.
std::vector<Submodule> Fcl_set(const Submodule& j, const Submodule& i, const PairOp& cl);
// {(J, x_1..x_{k-1}) + I^clsp : (J, x_1..x_k) a minimal reduction of I mod J}
std::vector<Submodule> Fcl_family(const Submodule& j, const Submodule& i, const SpecialPartOp& sp);
Verdict Fcl_check(const Submodule& j, const Submodule& i, const SpecialPartOp& sp);

struct PreredSpecialPart {
  Verdict verdict;
  std::optional<int> spread;
  std::vector<Submodule> family;         // (y_1..y_{k-1}) + I^clsp over minimal reductions
  std::vector<Submodule> prereductions;  // by enumeration
};
PreredSpecialPart prered_via_specialpart(const Submodule& i, const SpecialPartOp& sp);

}  // namespace closurelab
