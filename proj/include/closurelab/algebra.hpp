#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "closurelab/linalg.hpp"
#include "closurelab/semigroup.hpp"

namespace closurelab {

enum class Backend { Semigroup, MonomialQuotient, TRing };

std::string backend_name(Backend b);

// Finite-dimensional commutative local F_p-algebra with a monomial basis:
// the product of two basis monomials is another basis monomial or zero.
// Basis order is by degree, then lexicographic with larger x-exponent first,
// so the pivot of an echelon row is its lowest-degree term.
class LocalAlgebra {
 public:
  using Exponent = std::vector<int>;

  static std::shared_ptr<const LocalAlgebra> semigroup(const NumericalSemigroup& s, int p, int D);
  static std::shared_ptr<const LocalAlgebra> monomial_quotient(const std::vector<std::string>& vars,
                                                               const std::vector<Exponent>& relations,
                                                               int p, int D);
  // k[[x^2,x^5,y,xy]] truncated at total degree D
  static std::shared_ptr<const LocalAlgebra> t_ring(int p, int D);

  Backend backend() const { return backend_; }
  const Fp& field() const { return f_; }
  int truncation() const { return D_; }
  int dim() const { return static_cast<int>(exps_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Exponent& exponent(int i) const { return exps_[i]; }
  int degree(int i) const { return degs_[i]; }
  int index_of(const Exponent& e) const;  // -1 if not a basis monomial
  int prod(int i, int j) const { return table_[static_cast<size_t>(i) * exps_.size() + j]; }
  const std::vector<int>& m_generators() const { return mgens_; }
  std::string label(int i) const;
  const std::optional<NumericalSemigroup>& semigroup_data() const { return sg_; }
  const std::vector<Exponent>& relations() const { return rels_; }
  std::string describe() const;

  Vec unit() const;
  Vec basis_vector(int i) const;
  Vec multiply(const Vec& a, const Vec& b) const;

 private:
  LocalAlgebra(Backend b, int p, int D) : backend_(b), f_(p), D_(D) {}
  void build(const std::function<bool(const Exponent&)>& allowed, int nvars);

  Backend backend_;
  Fp f_;
  int D_;
  std::vector<std::string> vars_;
  std::vector<Exponent> exps_;
  std::vector<int> degs_;
  std::vector<int> table_;
  std::vector<int> mgens_;
  std::vector<Exponent> rels_;
  std::optional<NumericalSemigroup> sg_;
};

using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

// Finite-length module over a LocalAlgebra. Either the regular module (the
// algebra acting on itself, via the product table) or a module given by an
// action matrix for every basis monomial.
class Module {
 public:
  static std::shared_ptr<const Module> regular(AlgebraPtr a);
  // act[k][j] = image of the j-th basis vector under basis monomial k
  static std::shared_ptr<const Module> from_action(AlgebraPtr a, std::vector<std::vector<Vec>> act,
                                                   std::vector<std::string> labels, std::string name);

  const AlgebraPtr& algebra() const { return alg_; }
  const Fp& field() const { return alg_->field(); }
  int dim() const { return dim_; }
  bool is_regular() const { return regular_; }
  const std::string& name() const { return name_; }
  const std::string& label(int j) const { return labels_[j]; }

  Vec act(int k, const Vec& u) const;
  Vec act_elem(const Vec& r, const Vec& u) const;
  // full action matrices (columns), materialized for regular modules too
  std::vector<std::vector<Vec>> action_columns() const;
  // Checks the module axioms on every basis triple; throws on failure.
  void validate() const;

 private:
  Module() = default;
  AlgebraPtr alg_;
  int dim_ = 0;
  bool regular_ = false;
  std::vector<std::vector<Vec>> act_;
  std::vector<std::string> labels_;
  std::string name_;
};

using ModulePtr = std::shared_ptr<const Module>;

// Submodule of a fixed ambient module, stored as a canonical echelon basis.
struct Submodule {
  ModulePtr mod;
  Subspace space;

  int dim() const { return space.dim(); }
  const std::vector<Vec>& rows() const { return space.rows(); }
  bool contains(const Submodule& o) const { return space.contains(o.space); }
  bool contains(const Vec& v) const { return space.contains(v); }
  bool operator==(const Submodule& o) const { return mod == o.mod && space == o.space; }
  bool operator!=(const Submodule& o) const { return !(*this == o); }
  bool operator<(const Submodule& o) const { return space < o.space; }
};

struct SubmoduleHash {
  size_t operator()(const Submodule& s) const { return s.space.hash(); }
};

Submodule zero(const ModulePtr& m);
Submodule whole(const ModulePtr& m);
Submodule generate(const ModulePtr& m, const std::vector<Vec>& gens);
Submodule maximal_ideal(const ModulePtr& regular);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);
Submodule m_times(const Submodule& n);
Submodule m_power_times(int r, const Submodule& n);
// I * N for an ideal I (a submodule of the regular module of the same algebra)
Submodule ideal_times(const Submodule& ideal, const Submodule& n);
// (A :_M I) = {u in M : I u subset A}
Submodule colon(const Submodule& a, const Submodule& m, const Submodule& ideal);
// (A :_M m)
Submodule colon_m(const Submodule& a, const Submodule& m);
// (A :_R N) as an ideal of the regular module `ring`
Submodule colon_ideal(const Submodule& a, const Submodule& n, const ModulePtr& ring);
Submodule annihilator(const Submodule& n, const ModulePtr& ring);
// lifts of a basis of N/mN taken from the echelon rows, lowest degree first
std::vector<Vec> minimal_generators(const Submodule& n);
int mu(const Submodule& n);
int colength(const Submodule& n);  // dim of ambient / n
bool is_submodule(const ModulePtr& m, const Subspace& s);

// Submodules K with l < K <= upper and K/l simple.
std::vector<Submodule> upper_covers(const Submodule& l, const Submodule& upper);
// Submodules K < l with l/K simple (the hyperplanes of l containing ml).
std::vector<Submodule> lower_covers(const Submodule& l);

// Every submodule L with lower <= L <= upper, found by walking covers.
// Throws EnumerationBound if more than `bound` are found.
std::vector<Submodule> submodule_interval(const Submodule& lower, const Submodule& upper, long bound);

struct EnumerationBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long default_enumeration_bound();  // CLOSURE_LAB_MAX_ENUM, else 2^20

}  // namespace closurelab
