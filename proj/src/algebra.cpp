#include "closurelab/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace closurelab {

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Semigroup: return "semigroup";
    case Backend::MonomialQuotient: return "monomial-quotient";
    case Backend::TRing: return "T";
  }
  return "?";
}

namespace {

constexpr int kFullAssocCheck = 160;

int total(const LocalAlgebra::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

void LocalAlgebra::build(const std::function<bool(const Exponent&)>& allowed, int nvars) {
  std::vector<Exponent> all;
  if (nvars == 1) {
    for (int s = 0; s < D_; ++s) all.push_back({s});
  } else {
    for (int a = 0; a < D_; ++a)
      for (int b = 0; a + b < D_; ++b) all.push_back({a, b});
  }
  for (auto& e : all)
    if (allowed(e)) exps_.push_back(e);
  std::sort(exps_.begin(), exps_.end(), [](const Exponent& a, const Exponent& b) {
    int da = total(a), db = total(b);
    if (da != db) return da < db;
    return a > b;
  });
  for (auto& e : exps_) degs_.push_back(total(e));
  size_t n = exps_.size();
  table_.assign(n * n, -1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Exponent e = exps_[i];
      for (size_t v = 0; v < e.size(); ++v) e[v] += exps_[j][v];
      if (total(e) < D_ && allowed(e)) table_[i * n + j] = index_of(e);
    }
  // minimal generators of m: monomials of m outside m^2
  std::vector<bool> in_m2(n, false);
  for (size_t i = 1; i < n; ++i)
    for (size_t j = 1; j < n; ++j)
      if (prod(i, j) >= 0) in_m2[prod(i, j)] = true;
  for (size_t i = 1; i < n; ++i)
    if (!in_m2[i]) mgens_.push_back(static_cast<int>(i));

  if (n == 0 || total(exps_[0]) != 0) throw std::invalid_argument("algebra has no unit monomial");
  if (n <= kFullAssocCheck) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (prod(i, j) != prod(j, i)) throw std::logic_error("product table is not commutative");
        for (size_t k = 0; k < n; ++k) {
          int ij = prod(i, j), jk = prod(j, k);
          int l = ij < 0 ? -1 : prod(ij, k);
          int r = jk < 0 ? -1 : prod(i, jk);
          if (l != r) throw std::logic_error("product table is not associative");
        }
      }
  }
}

int LocalAlgebra::index_of(const Exponent& e) const {
  // exps_ is sorted by (degree asc, exponent desc)
  auto cmp = [](const Exponent& a, const Exponent& b) {
    int da = total(a), db = total(b);
    if (da != db) return da < db;
    return a > b;
  };
  auto it = std::lower_bound(exps_.begin(), exps_.end(), e, cmp);
  if (it == exps_.end() || *it != e) return -1;
  return static_cast<int>(it - exps_.begin());
}

std::shared_ptr<const LocalAlgebra> LocalAlgebra::semigroup(const NumericalSemigroup& s, int p, int D) {
  int need = s.conductor() + 2 * s.max_generator();
  if (D <= need)
    throw std::invalid_argument("truncation D=" + std::to_string(D) + " is below the exactness window for " +
                                s.name() + ": need D > conductor + 2*max generator = " + std::to_string(need));
  std::shared_ptr<LocalAlgebra> a(new LocalAlgebra(Backend::Semigroup, p, D));
  a->vars_ = {"x"};
  a->sg_ = s;
  a->build([&](const Exponent& e) { return s.contains(e[0]); }, 1);
  return a;
}

std::shared_ptr<const LocalAlgebra> LocalAlgebra::monomial_quotient(const std::vector<std::string>& vars,
                                                                    const std::vector<Exponent>& relations,
                                                                    int p, int D) {
  if (vars.empty() || vars.size() > 2) throw std::invalid_argument("monomial quotient supports one or two variables");
  for (const auto& r : relations) {
    if (r.size() != vars.size()) throw std::invalid_argument("relation has the wrong number of exponents");
    if (total(r) >= D) throw std::invalid_argument("relation degree must be below the truncation degree");
    if (total(r) == 0) throw std::invalid_argument("relation 1 gives the zero ring");
  }
  std::shared_ptr<LocalAlgebra> a(new LocalAlgebra(Backend::MonomialQuotient, p, D));
  a->vars_ = vars;
  a->rels_ = relations;
  a->build(
      [&](const Exponent& e) {
        for (const auto& r : relations) {
          bool divisible = true;
          for (size_t v = 0; v < r.size(); ++v) divisible = divisible && e[v] >= r[v];
          if (divisible) return false;
        }
        return true;
      },
      static_cast<int>(vars.size()));
  return a;
}

std::shared_ptr<const LocalAlgebra> LocalAlgebra::t_ring(int p, int D) {
  NumericalSemigroup s({2, 5});
  std::shared_ptr<LocalAlgebra> a(new LocalAlgebra(Backend::TRing, p, D));
  a->vars_ = {"x", "y"};
  a->build([&](const Exponent& e) { return e[1] >= 1 || s.contains(e[0]); }, 2);
  return a;
}

std::string LocalAlgebra::label(int i) const {
  const auto& e = exps_[i];
  std::string out;
  for (size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars_[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

std::string LocalAlgebra::describe() const {
  std::ostringstream os;
  switch (backend_) {
    case Backend::Semigroup: os << "k[[" << sg_->name() << "]]"; break;
    case Backend::TRing: os << "k[[x^2,x^5,y,xy]]"; break;
    case Backend::MonomialQuotient: {
      os << "k[[";
      for (size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
      os << "]]";
      if (!rels_.empty()) {
        os << "/(";
        for (size_t r = 0; r < rels_.size(); ++r) {
          std::string l;
          for (size_t v = 0; v < vars_.size(); ++v) {
            if (rels_[r][v] == 0) continue;
            if (!l.empty()) l += "*";
            l += vars_[v] + (rels_[r][v] > 1 ? "^" + std::to_string(rels_[r][v]) : "");
          }
          os << (r ? "," : "") << l;
        }
        os << ")";
      }
      break;
    }
  }
  os << " over F_" << f_.p() << ", truncated at degree " << D_;
  return os.str();
}

Vec LocalAlgebra::unit() const { return basis_vector(0); }

Vec LocalAlgebra::basis_vector(int i) const {
  Vec v(exps_.size(), 0);
  v[i] = 1;
  return v;
}

Vec LocalAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(exps_.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      int k = prod(static_cast<int>(i), static_cast<int>(j));
      if (k >= 0) out[k] = f_.add(out[k], f_.mul(a[i], b[j]));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Module

std::shared_ptr<const Module> Module::regular(AlgebraPtr a) {
  std::shared_ptr<Module> m(new Module());
  m->dim_ = a->dim();
  m->regular_ = true;
  for (int i = 0; i < a->dim(); ++i) m->labels_.push_back(a->label(i));
  m->name_ = "R";
  m->alg_ = std::move(a);
  return m;
}

std::shared_ptr<const Module> Module::from_action(AlgebraPtr a, std::vector<std::vector<Vec>> act,
                                                  std::vector<std::string> labels, std::string name) {
  if (static_cast<int>(act.size()) != a->dim()) throw std::invalid_argument("one action matrix per basis monomial");
  std::shared_ptr<Module> m(new Module());
  m->dim_ = static_cast<int>(labels.size());
  for (const auto& cols : act) {
    if (static_cast<int>(cols.size()) != m->dim_) throw std::invalid_argument("action matrix has wrong size");
    for (const auto& c : cols)
      if (static_cast<int>(c.size()) != m->dim_) throw std::invalid_argument("action matrix has wrong size");
  }
  m->act_ = std::move(act);
  m->labels_ = std::move(labels);
  m->name_ = std::move(name);
  m->alg_ = std::move(a);
  return m;
}

Vec Module::act(int k, const Vec& u) const {
  const Fp& f = field();
  Vec out(dim_, 0);
  if (regular_) {
    for (int j = 0; j < dim_; ++j) {
      if (!u[j]) continue;
      int t = alg_->prod(k, j);
      if (t >= 0) out[t] = f.add(out[t], u[j]);
    }
    return out;
  }
  for (int j = 0; j < dim_; ++j)
    if (u[j]) f.axpy(out, u[j], act_[k][j]);
  return out;
}

Vec Module::act_elem(const Vec& r, const Vec& u) const {
  const Fp& f = field();
  Vec out(dim_, 0);
  for (size_t k = 0; k < r.size(); ++k)
    if (r[k]) f.axpy(out, r[k], act(static_cast<int>(k), u));
  return out;
}

std::vector<std::vector<Vec>> Module::action_columns() const {
  if (!regular_) return act_;
  int n = alg_->dim();
  std::vector<std::vector<Vec>> cols(n, std::vector<Vec>(dim_, Vec(dim_, 0)));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < dim_; ++j) {
      int t = alg_->prod(k, j);
      if (t >= 0) cols[k][j][t] = 1;
    }
  return cols;
}

void Module::validate() const {
  if (regular_) return;
  int n = alg_->dim();
  for (int j = 0; j < dim_; ++j) {
    Vec e(dim_, 0);
    e[j] = 1;
    if (act(0, e) != e) throw std::logic_error("unit does not act as the identity on " + name_);
    for (int a = 1; a < n; ++a) {
      Vec be = act(a, e);
      for (int b = 1; b < n; ++b) {
        int ab = alg_->prod(a, b);
        Vec lhs = ab < 0 ? Vec(dim_, 0) : act(ab, e);
        if (lhs != act(b, be)) throw std::logic_error("action on " + name_ + " is not associative");
      }
    }
  }
}

// ---------------------------------------------------------------- Submodules

Submodule zero(const ModulePtr& m) { return {m, Subspace(m->field(), m->dim())}; }

Submodule whole(const ModulePtr& m) { return {m, Subspace::full(m->field(), m->dim())}; }

Submodule generate(const ModulePtr& m, const std::vector<Vec>& gens) {
  Subspace s(m->field(), m->dim());
  std::deque<Vec> queue;
  for (const auto& g : gens)
    if (s.insert(g)) queue.push_back(g);
  const auto& mg = m->algebra()->m_generators();
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (int k : mg) {
      Vec w = m->act(k, v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return {m, std::move(s)};
}

Submodule maximal_ideal(const ModulePtr& regular) {
  if (!regular->is_regular()) throw std::invalid_argument("maximal_ideal needs the regular module");
  const auto& a = *regular->algebra();
  std::vector<Vec> gens;
  for (int k : a.m_generators()) gens.push_back(a.basis_vector(k));
  return generate(regular, gens);
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (a.mod != b.mod) throw std::invalid_argument("sum of submodules of different modules");
  return {a.mod, sum(a.space, b.space)};
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.mod != b.mod) throw std::invalid_argument("intersection of submodules of different modules");
  return {a.mod, intersect(a.space, b.space)};
}

Submodule m_times(const Submodule& n) {
  std::vector<Vec> gens;
  for (int k : n.mod->algebra()->m_generators())
    for (const auto& r : n.rows()) gens.push_back(n.mod->act(k, r));
  return generate(n.mod, gens);
}

Submodule m_power_times(int r, const Submodule& n) {
  Submodule out = n;
  for (int i = 0; i < r && out.dim() > 0; ++i) out = m_times(out);
  return out;
}

Submodule ideal_times(const Submodule& ideal, const Submodule& n) {
  if (!ideal.mod->is_regular() || ideal.mod->algebra() != n.mod->algebra())
    throw std::invalid_argument("ideal_times needs an ideal of the acting algebra");
  std::vector<Vec> gens;
  auto ig = minimal_generators(ideal);
  auto ng = minimal_generators(n);
  for (const auto& a : ig)
    for (const auto& u : ng) gens.push_back(n.mod->act_elem(a, u));
  return generate(n.mod, gens);
}

namespace {

// Kernel of c -> (NF_A(op_g(sum_r c_r basis_r)))_g, returned in ambient coordinates.
Subspace linear_colon(const Subspace& a, const std::vector<Vec>& basis,
                      const std::vector<std::function<Vec(const Vec&)>>& ops, int out_dim) {
  const Fp& f = a.field();
  int nb = static_cast<int>(basis.size());
  std::vector<bool> is_piv(a.ambient(), false);
  for (int j : a.pivots()) is_piv[j] = true;
  std::vector<Vec> constraints;
  for (const auto& op : ops) {
    std::vector<Vec> images;
    images.reserve(nb);
    for (const auto& b : basis) images.push_back(a.reduce(op(b)));
    for (int j = 0; j < a.ambient(); ++j) {
      if (is_piv[j]) continue;
      Vec row(nb, 0);
      bool nz = false;
      for (int r = 0; r < nb; ++r) {
        row[r] = images[r][j];
        nz = nz || row[r];
      }
      if (nz) constraints.push_back(std::move(row));
    }
  }
  Subspace k = kernel(f, nb, constraints);
  Subspace out(f, out_dim);
  for (const auto& c : k.rows()) out.insert(combine(f, out_dim, c, basis));
  return out;
}

}  // namespace

Submodule colon(const Submodule& a, const Submodule& m, const Submodule& ideal) {
  if (a.mod != m.mod) throw std::invalid_argument("colon of submodules of different modules");
  std::vector<std::function<Vec(const Vec&)>> ops;
  for (const auto& g : minimal_generators(ideal))
    ops.push_back([&, g](const Vec& u) { return a.mod->act_elem(g, u); });
  return {a.mod, linear_colon(a.space, m.rows(), ops, a.mod->dim())};
}

Submodule colon_m(const Submodule& a, const Submodule& m) {
  if (a.mod != m.mod) throw std::invalid_argument("colon of submodules of different modules");
  std::vector<std::function<Vec(const Vec&)>> ops;
  for (int k : a.mod->algebra()->m_generators())
    ops.push_back([&, k](const Vec& u) { return a.mod->act(k, u); });
  return {a.mod, linear_colon(a.space, m.rows(), ops, a.mod->dim())};
}

Submodule colon_ideal(const Submodule& a, const Submodule& n, const ModulePtr& ring) {
  if (a.mod != n.mod) throw std::invalid_argument("colon of submodules of different modules");
  const auto& alg = *ring->algebra();
  std::vector<Vec> basis;
  for (int k = 0; k < alg.dim(); ++k) basis.push_back(alg.basis_vector(k));
  std::vector<std::function<Vec(const Vec&)>> ops;
  // r -> r*u, linear in r; act_elem takes r in algebra coordinates
  for (const auto& u : minimal_generators(n))
    ops.push_back([&, u](const Vec& r) { return a.mod->act_elem(r, u); });
  return {ring, linear_colon(a.space, basis, ops, alg.dim())};
}

Submodule annihilator(const Submodule& n, const ModulePtr& ring) { return colon_ideal(zero(n.mod), n, ring); }

std::vector<Vec> minimal_generators(const Submodule& n) {
  if (n.dim() == 0) return {};
  return complement_basis(m_times(n).space, n.space);
}

int mu(const Submodule& n) { return static_cast<int>(minimal_generators(n).size()); }

int colength(const Submodule& n) { return n.mod->dim() - n.dim(); }

bool is_submodule(const ModulePtr& m, const Subspace& s) {
  for (int k : m->algebra()->m_generators())
    for (const auto& r : s.rows())
      if (!s.contains(m->act(k, r))) return false;
  return true;
}

std::vector<Submodule> upper_covers(const Submodule& l, const Submodule& upper) {
  const Fp& f = l.mod->field();
  auto comp = complement_basis(l.space, colon_m(l, upper).space);
  std::vector<Submodule> out;
  for_each_vector(f, static_cast<int>(comp.size()), [&](const Vec& c) {
    int lead = leading_index(c);
    if (lead < 0 || c[lead] != 1) return;
    Subspace next = l.space;
    next.insert(combine(f, l.mod->dim(), c, comp));
    out.push_back({l.mod, std::move(next)});
  });
  return out;
}

std::vector<Submodule> lower_covers(const Submodule& l) {
  const Fp& f = l.mod->field();
  Submodule ml = m_times(l);
  auto comp = complement_basis(ml.space, l.space);
  int q = static_cast<int>(comp.size());
  std::vector<Submodule> out;
  if (q == 0) return out;
  for (const auto& h : subspaces_of_dim(f, q, q - 1)) {
    Subspace s = ml.space;
    for (const auto& c : h) s.insert(combine(f, l.mod->dim(), c, comp));
    out.push_back({l.mod, std::move(s)});
  }
  return out;
}

std::vector<Submodule> submodule_interval(const Submodule& lower, const Submodule& upper, long bound) {
  if (!upper.contains(lower)) return {};
  std::vector<Submodule> out{lower};
  std::unordered_set<Subspace, SubspaceHash> seen{lower.space};
  for (size_t idx = 0; idx < out.size(); ++idx) {
    for (auto& next : upper_covers(out[idx], upper)) {
      if (seen.insert(next.space).second) {
        out.push_back(std::move(next));
        if (static_cast<long>(out.size()) > bound)
          throw EnumerationBound("submodule interval exceeds the enumeration bound of " + std::to_string(bound));
      }
    }
  }
  return out;
}

long default_enumeration_bound() {
  if (const char* e = std::getenv("CLOSURE_LAB_MAX_ENUM")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end != e && v > 0) return v;
  }
  return 1L << 20;
}

}  // namespace closurelab
