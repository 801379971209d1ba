#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "closurelab/algebra.hpp"

namespace closurelab {

// Outcome of one property check over a set of instances.
struct CheckResult {
  CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  long instances = 0;
  bool applicable = true;
  // the claim as stated has known counterexamples; a failure is a finding, not a violation
  bool disputed = false;
  std::string witness;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

// true when every undisputed check passes
bool all_pass(const std::vector<CheckResult>& rs);

// A pair operation p(N, M) for N <= M, memoized per (N, M).
class PairOp {
 public:
  enum class Kind { Closure, Interior };
  using Fn = std::function<Submodule(const Submodule& n, const Submodule& m)>;

  PairOp() = default;
  PairOp(std::string name, Kind kind, Fn fn);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  bool is_closure() const { return kind_ == Kind::Closure; }
  Submodule operator()(const Submodule& n, const Submodule& m) const;
  // p(N, M) with M the whole ambient module
  Submodule operator()(const Submodule& n) const { return (*this)(n, whole(n.mod)); }

 private:
  struct Key {
    const Module* mod;
    Subspace n, m;
    bool operator==(const Key& o) const { return mod == o.mod && n == o.n && m == o.m; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return k.n.hash() * 31 + k.m.hash() + std::hash<const void*>()(k.mod); }
  };
  struct Memo {
    std::mutex mu;
    std::unordered_map<Key, Submodule, KeyHash> map;
  };

  std::string name_;
  Kind kind_ = Kind::Closure;
  Fn fn_;
  std::shared_ptr<Memo> memo_;
};

// N^mbf_M = (mN :_M m)
PairOp mbf_closure();
// m^r M for the largest r with N <= m^r M; zero when N is zero
PairOp ord_closure();
// valuation closure {z : v(z) >= v_min(N)} intersected with M; semigroup backend, ideals only
PairOp integral_closure();
PairOp identity_closure();

// Closure given by a finite table of ideals of one algebra; unlisted inputs throw.
struct ClosureTable {
  std::string name;
  std::string source;
  std::vector<std::pair<Submodule, Submodule>> entries;
};
ClosureTable load_closure_table(const std::string& path, const ModulePtr& ring);
PairOp table_closure(const ClosureTable& t);

struct UndefinedValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Minimal valuation of a nonzero ideal of the semigroup backend; -1 for zero.
int min_valuation(const Submodule& n);

// ---- reductions in the sense of a closure

bool is_reduction(const PairOp& cl, const Submodule& l, const Submodule& n, const Submodule& m);

struct Instance {
  Submodule n, m;
};

// Closure axioms (extensive, idempotent, both order-preservation forms, and
// the Nakayama property checked against every submodule of each N).
std::vector<CheckResult> check_closure_axioms(const PairOp& cl, const std::vector<Instance>& instances,
                                              long bound = 1 << 16);

enum class Relation { Equal, Less, Greater, Incomparable };
std::string relation_name(Relation r);

struct Comparison {
  Relation relation = Relation::Equal;
  // first instance where a is not inside b, and vice versa
  std::string a_not_in_b, b_not_in_a;
};
Comparison compare_ops(const PairOp& a, const PairOp& b, const std::vector<Instance>& instances);

}  // namespace closurelab
