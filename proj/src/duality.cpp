#include "closurelab/duality.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "closurelab/expr.hpp"

namespace closurelab {

namespace {

std::vector<Submodule> sorted(std::vector<Submodule> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains_sub(const std::vector<Submodule>& v, const Submodule& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string pair_str(const Submodule& a, const Submodule& b) { return format_submodule(a) + ", " + format_submodule(b); }

std::string power_label(const std::string& var, int e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

struct DualCache {
  std::mutex mu;
  std::unordered_map<const Module*, ModulePtr> dual;
  std::map<std::pair<const Module*, Subspace>, ModulePtr> restricted;
  std::unordered_map<const Module*, std::pair<ModulePtr, Subspace>> restricted_from;
};

DualCache& cache() {
  static DualCache c;
  return c;
}

// every element of a submodule, as vectors of the ambient
std::vector<Vec> all_elements(const Submodule& s) {
  std::vector<Vec> out;
  const Fp& f = s.mod->field();
  for_each_vector(f, s.dim(), [&](const Vec& c) { out.push_back(combine(f, s.mod->dim(), c, s.rows())); });
  return out;
}

bool covers(const Submodule& big, const Submodule& small) {
  return big.contains(small) && big.dim() == small.dim() + 1 && small.contains(m_times(big));
}

}  // namespace

ModulePtr contragredient(const ModulePtr& m) {
  const auto& a = m->algebra();
  int n = m->dim();
  auto cols = m->action_columns();
  std::vector<std::vector<Vec>> act(a->dim(), std::vector<Vec>(n, Vec(n, 0)));
  for (int k = 0; k < a->dim(); ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) act[k][j][i] = cols[k][i][j];
  std::vector<std::string> labels;
  std::string name = "(" + m->name() + ")^v";
  const auto& sg = a->semigroup_data();
  if (m->is_regular() && sg) {
    // the dual of x^s is written x^{F-s}, so the socle of E is x^F
    for (int i = 0; i < n; ++i) labels.push_back(power_label(a->vars().front(), sg->frobenius() - a->degree(i)));
    name = "E";
  } else {
    for (int i = 0; i < n; ++i) labels.push_back("d[" + m->label(i) + "]");
  }
  return Module::from_action(a, std::move(act), std::move(labels), std::move(name));
}

ModulePtr dual_module(const ModulePtr& m) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.dual.find(m.get());
  if (it != c.dual.end()) return it->second;
  ModulePtr d = contragredient(m);
  c.dual.emplace(m.get(), d);
  c.dual.emplace(d.get(), m);
  return d;
}

ModulePtr injective_hull(const ModulePtr& ring) {
  if (!ring->is_regular() || !ring->algebra()->semigroup_data())
    throw std::invalid_argument("injective hull labels need the regular module of a semigroup ring");
  return dual_module(ring);
}

ModulePtr restrict_module(const Submodule& b) {
  if (b == whole(b.mod)) return b.mod;
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_pair(b.mod.get(), b.space);
  auto it = c.restricted.find(key);
  if (it != c.restricted.end()) return it->second;
  const auto& a = b.mod->algebra();
  const auto& rows = b.rows();
  std::vector<std::vector<Vec>> act(a->dim());
  for (int k = 0; k < a->dim(); ++k)
    for (const auto& r : rows) act[k].push_back(b.space.coords(b.mod->act(k, r)));
  std::vector<std::string> labels;
  for (const auto& r : rows) labels.push_back(format_element(*b.mod, r));
  ModulePtr out = Module::from_action(a, std::move(act), std::move(labels), b.mod->name() + " | " + format_submodule(b));
  c.restricted.emplace(key, out);
  c.restricted_from.emplace(out.get(), std::make_pair(b.mod, b.space));
  return out;
}

Submodule to_restricted(const Submodule& a, const Submodule& b) {
  if (!b.contains(a)) throw std::invalid_argument("to_restricted: A is not inside B");
  ModulePtr rb = restrict_module(b);
  if (rb == b.mod) return a;
  std::vector<Vec> coords;
  for (const auto& r : a.rows()) coords.push_back(b.space.coords(r));
  return Submodule{rb, Subspace::span(b.mod->field(), rb->dim(), coords)};
}

Submodule from_restricted(const Submodule& a, const Submodule& b) {
  if (a.mod == b.mod) return a;
  if (a.mod != restrict_module(b)) throw std::invalid_argument("from_restricted: not a submodule of restrict_module(B)");
  const Fp& f = b.mod->field();
  std::vector<Vec> rows;
  for (const auto& r : a.rows()) rows.push_back(combine(f, b.mod->dim(), r, b.rows()));
  return Submodule{b.mod, Subspace::span(f, b.mod->dim(), rows)};
}

Submodule perp_in_dual(const Submodule& a) { return Submodule{dual_module(a.mod), perp(a.space)}; }

Submodule annihilated_by(const Submodule& l) { return Submodule{dual_module(l.mod), perp(l.space)}; }

Submodule dual_of_quotient(const Submodule& a, const Submodule& b) { return perp_in_dual(to_restricted(a, b)); }

Submodule quotient_of_dual(const Submodule& l, const Submodule& b) {
  if (l.mod != dual_module(restrict_module(b))) throw std::invalid_argument("quotient_of_dual: L is not inside B^v");
  return from_restricted(annihilated_by(l), b);
}

PairOp dual_op(const PairOp& p) {
  auto kind = p.is_closure() ? PairOp::Kind::Interior : PairOp::Kind::Closure;
  return PairOp(p.name() + "^v", kind, [p](const Submodule& a, const Submodule& b) {
    Submodule q = dual_of_quotient(a, b);
    return quotient_of_dual(p(q, whole(q.mod)), b);
  });
}

Submodule kernel_preimage(const Vec& g, const Submodule& b) {
  ModulePtr d = dual_module(restrict_module(b));
  return quotient_of_dual(generate(d, {g}), b);
}

// ---- expansions

ExpansionReport enumerate_expansions(const PairOp& in, const Submodule& a, const Submodule& b, long bound) {
  ExpansionReport rep;
  rep.interior = in.name();
  auto all = submodule_interval(a, b, bound);
  rep.visited = static_cast<long>(all.size());
  for (const auto& c : all)
    if (a.contains(in(c, b))) rep.expansions.push_back(c);
  rep.expansions = sorted(rep.expansions);
  rep.maximal = maximal_elements(rep.expansions);
  rep.hull = sum_all(rep.expansions, a);
  rep.cobasic = rep.expansions.size() == 1 && rep.expansions.front() == a;
  std::set<int> counts;
  for (const auto& c : rep.maximal) counts.insert(cogenerator_count(c, b));
  if (counts.size() == 1) rep.cospread = *counts.begin();
  return rep;
}

PostexpansionReport enumerate_postexpansions(const PairOp& in, const Submodule& a, const Submodule& b) {
  PostexpansionReport rep;
  rep.interior = in.name();
  Submodule top = colon_m(a, b);
  auto comp = complement_basis(a.space, top.space);
  const Fp& f = a.mod->field();
  std::vector<Submodule> nonexp;
  for (const auto& w : all_subspaces(f, static_cast<int>(comp.size()))) {
    ++rep.visited;
    Subspace s = a.space;
    for (const auto& c : w) s.insert(combine(f, a.mod->dim(), c, comp));
    Submodule c{a.mod, s};
    if (!is_expansion(in, c, a, b)) nonexp.push_back(c);
  }
  rep.postexpansions = minimal_elements(nonexp);
  if (!rep.postexpansions.empty()) {
    rep.postcore = intersect_all(rep.postexpansions, b);
    rep.posthull = sum_all(rep.postexpansions, b);
  }
  return rep;
}

int cogenerator_count(const Submodule& a, const Submodule& b) { return colon_m(a, b).dim() - a.dim(); }

bool i_independent(const PairOp& in, const std::vector<Submodule>& kernels, const Submodule& b) {
  for (size_t i = 0; i < kernels.size(); ++i) {
    Submodule rest = b;
    for (size_t r = 0; r < kernels.size(); ++r)
      if (r != i) rest = intersect(rest, kernels[r]);
    if (kernels[i].contains(in(rest, b))) return false;
  }
  return true;
}

CogeneratorAnalysis cogenerator_analysis(const PairOp& in, const Submodule& a, const Submodule& b, long bound) {
  CogeneratorAnalysis out;
  Submodule nd = dual_of_quotient(a, b);
  const Fp& f = nd.mod->field();
  auto gens = minimal_generators(nd);
  for (const auto& g : gens) out.kernels.push_back(kernel_preimage(g, b));
  out.independent = i_independent(in, out.kernels, b);

  // every minimal cogenerating set, through the canonical lifts
  int k = static_cast<int>(gens.size());
  std::vector<std::vector<Submodule>> sets;
  out.strongly_independent = true;
  for (const auto& basis : all_bases(f, k)) {
    std::vector<Submodule> ks;
    for (const auto& c : basis) ks.push_back(kernel_preimage(combine(f, nd.mod->dim(), c, gens), b));
    if (!i_independent(in, ks, b)) out.strongly_independent = false;
    sets.push_back(std::move(ks));
  }
  auto exp = enumerate_expansions(in, a, b, bound);
  out.cospread = exp.cospread;

  Verdict& v = out.structure;
  if (a == b) {
    v.applicable = false;
    v.detail = "B/A is zero";
    return out;
  }
  if (!out.strongly_independent || !out.cospread) {
    v.applicable = false;
    v.detail = !out.strongly_independent ? "not strongly independent" : "cospread is not uniform";
    return out;
  }
  if (!exp.cobasic) {
    v.pass = false;
    v.detail = "strongly independent but not cobasic; maximal expansions: " + std::to_string(exp.maximal.size());
    return out;
  }
  std::vector<Submodule> family;
  for (const auto& ks : sets)
    for (size_t i = 0; i < ks.size(); ++i) {
      Submodule c = colon_m(ks[i], b);
      for (size_t r = 0; r < ks.size(); ++r)
        if (r != i) c = intersect(c, ks[r]);
      if (!contains_sub(family, c)) family.push_back(c);
    }
  family = sorted(family);
  auto post = enumerate_postexpansions(in, a, b).postexpansions;
  v.pass = family == post;
  v.detail = "cospread " + std::to_string(*out.cospread) + ", " + std::to_string(post.size()) + " postexpansions, " +
             std::to_string(family.size()) + " of the intersection form";
  if (!v.pass) {
    for (const auto& c : post)
      if (!contains_sub(family, c)) v.detail += "; unmatched postexpansion " + format_submodule(c);
    for (const auto& c : family)
      if (!contains_sub(post, c)) v.detail += "; family member not a postexpansion " + format_submodule(c);
  }
  return out;
}

// ---- checks

Verdict sum_intersect_duality_check(const Submodule& b, const std::vector<Submodule>& family) {
  Verdict v;
  if (family.empty()) {
    v.applicable = false;
    return v;
  }
  ModulePtr bd = dual_module(restrict_module(b));
  std::vector<Submodule> duals;
  for (const auto& c : family) duals.push_back(dual_of_quotient(c, b));
  Submodule s = dual_of_quotient(sum_all(family, b), b), meet = intersect_all(duals, whole(bd));
  Submodule i = dual_of_quotient(intersect_all(family, b), b), plus = sum_all(duals, whole(bd));
  if (s != meet) {
    v.pass = false;
    v.detail = "dual of B over the sum differs from the meet of duals";
  } else if (i != plus) {
    v.pass = false;
    v.detail = "dual of B over the meet differs from the sum of duals";
  }
  return v;
}

std::vector<CheckResult> duality_identities(const PairOp& cl, const PairOp& in, const Submodule& a,
                                            const Submodule& b, long bound) {
  auto all = submodule_interval(a, b, bound);
  PairOp cl_dual = dual_op(cl), in_dual = dual_op(in);
  ModulePtr rb = restrict_module(b), bd = dual_module(rb);
  Submodule wd = whole(bd);
  ModulePtr ring = Module::regular(b.mod->algebra());

  CheckResult lemma{"(B/C_i)^v is the closure of (B/C)^v"}, in_eq{in.name() + " equals the dual of " + cl.name()},
      cl_eq{cl.name() + " equals the dual of " + in.name() + " on B^v"}, ann{"Ann(B/C) = Ann((B/C)^v)"},
      sumint{"sum and intersection duality"};
  for (const auto& c : all) {
    Submodule l = dual_of_quotient(c, b);
    ++lemma.instances;
    if (dual_of_quotient(in(c, b), b) != cl(l, wd)) lemma.fail(format_submodule(c));
    ++in_eq.instances;
    if (in(c, b) != cl_dual(c, b)) in_eq.fail(format_submodule(c));
    ++cl_eq.instances;
    if (cl(l, wd) != in_dual(l, wd)) cl_eq.fail(format_submodule(l));
    ++ann.instances;
    if (colon_ideal(c, b, ring).space != annihilator(l, ring).space) ann.fail(format_submodule(c));
  }
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i; j < all.size(); ++j) {
      ++sumint.instances;
      auto v = sum_intersect_duality_check(b, {all[i], all[j]});
      if (!v.pass) sumint.fail(pair_str(all[i], all[j]) + ": " + v.detail);
    }

  CheckResult dd{"double dual reproduces the action"};
  ++dd.instances;
  if (contragredient(contragredient(rb))->action_columns() != rb->action_columns()) dd.fail(rb->name());
  ++dd.instances;
  if (dual_module(bd) != rb) dd.fail("cached double dual of " + rb->name());
  return {lemma, in_eq, cl_eq, ann, sumint, dd};
}

std::vector<CheckResult> correspondence_check(const PairOp& cl, const PairOp& in, const Submodule& a,
                                              const Submodule& b, long bound) {
  auto all = submodule_interval(a, b, bound);
  Submodule nd = dual_of_quotient(a, b);
  Submodule wd = whole(nd.mod);
  auto dual_all = submodule_interval(zero(nd.mod), nd, bound);
  auto phi = [&](const Submodule& c) { return dual_of_quotient(c, b); };

  CheckResult bij{"C -> (B/C)^v is a bijection onto the submodules of (B/A)^v"}, order{"the map reverses order"};
  std::vector<Submodule> image;
  for (const auto& c : all) image.push_back(phi(c));
  ++bij.instances;
  if (sorted(image) != sorted(dual_all) || image.size() != dual_all.size())
    bij.fail(std::to_string(all.size()) + " above A, " + std::to_string(dual_all.size()) + " under (B/A)^v");
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      ++order.instances;
      if (all[j].contains(all[i]) != image[i].contains(image[j])) order.fail(pair_str(all[i], all[j]));
    }

  std::vector<Submodule> exp_img, nonexp_img, red, nonred;
  for (size_t i = 0; i < all.size(); ++i)
    (is_expansion(in, all[i], a, b) ? exp_img : nonexp_img).push_back(image[i]);
  for (const auto& l : dual_all) (is_reduction(cl, l, nd, wd) ? red : nonred).push_back(l);

  CheckResult e2r{"expansions correspond to reductions"}, p2p{"postexpansions correspond to prereductions"},
      c2i{"non-expansions correspond to non-reductions"};
  ++e2r.instances;
  if (sorted(exp_img) != sorted(red))
    e2r.fail(std::to_string(exp_img.size()) + " expansions, " + std::to_string(red.size()) + " reductions");
  ++c2i.instances;
  if (sorted(nonexp_img) != sorted(nonred))
    c2i.fail(std::to_string(nonexp_img.size()) + " non-expansions, " + std::to_string(nonred.size()) + " non-reductions");
  std::vector<Submodule> post_img;
  for (const auto& c : enumerate_postexpansions(in, a, b).postexpansions) post_img.push_back(phi(c));
  auto pre = enumerate_prereductions(cl, nd, wd).prereductions;
  ++p2p.instances;
  if (sorted(post_img) != pre)
    p2p.fail(std::to_string(post_img.size()) + " postexpansions, " + std::to_string(pre.size()) + " prereductions");
  return {bij, order, e2r, p2p, c2i};
}

std::vector<CheckResult> nonexpansion_suite(const PairOp& in, const Submodule& a, const Submodule& b, long bound) {
  std::vector<CheckResult> out;
  auto all = submodule_interval(a, b, bound);
  std::unordered_map<Subspace, size_t, SubspaceHash> index;
  for (size_t i = 0; i < all.size(); ++i) index.emplace(all[i].space, i);
  auto has = [&](const Submodule& s) { return index.count(s.space) > 0; };
  auto expansion = [&](const Submodule& c, const Submodule& base) { return is_expansion(in, c, base, b); };
  auto ib = [&](const Submodule& c) { return in(c, b); };

  std::vector<Submodule> nonexp, exps;
  for (const auto& c : all) (expansion(c, a) ? exps : nonexp).push_back(c);
  auto mini = minimal_elements(nonexp);
  std::map<Subspace, std::vector<Submodule>> post_cache;
  auto post_of = [&](const Submodule& c) -> const std::vector<Submodule>& {
    auto it = post_cache.find(c.space);
    if (it == post_cache.end()) it = post_cache.emplace(c.space, enumerate_postexpansions(in, c, b).postexpansions).first;
    return it->second;
  };
  const auto& post = post_of(a);

  CheckResult agree{"postexpansion search matches the lattice minima"};
  ++agree.instances;
  if (post != mini)
    agree.fail(std::to_string(post.size()) + " found by search, " + std::to_string(mini.size()) + " minimal in the lattice");
  out.push_back(agree);

  CheckResult n1{"non-expansions are closed under enlargement"}, n2{"non-expansions contain a minimal one"},
      n3{"meet of two minimal non-expansions is an expansion"}, n4{"meet of non-expansions is a non-expansion or an expansion"},
      n5{"(A :_C m) stays a non-expansion"}, n6{"C_i + A stays a non-expansion"},
      n7{"minimal A' = (A'_i meet (A :_C m)_i)_i + A for C containing A'"},
      n7any{"minimal A' = (A'_i meet (A :_C m)_i)_i + A for every non-expansion C"};
  n7any.disputed = true;
  for (const auto& c : nonexp) {
    for (const auto& k : upper_covers(c, b)) {
      ++n1.instances;
      if (expansion(k, a)) n1.fail(pair_str(c, k));
    }
    ++n2.instances;
    bool over = false;
    for (const auto& x : mini)
      if (c.contains(x)) over = true;
    if (!over) n2.fail(format_submodule(c));
    ++n5.instances;
    Submodule col = colon_m(a, c);
    if (!has(col) || expansion(col, a)) n5.fail(format_submodule(c));
    ++n6.instances;
    Submodule ci = sum(ib(c), a);
    if (!has(ci) || expansion(ci, a)) n6.fail(format_submodule(c));
    for (const auto& x : mini) {
      bool holds = sum(ib(intersect(ib(x), ib(colon_m(a, c)))), a) == x;
      ++n7any.instances;
      if (!holds) n7any.fail("A' = " + format_submodule(x) + ", C = " + format_submodule(c));
      if (!c.contains(x)) continue;
      ++n7.instances;
      if (!holds) n7.fail("A' = " + format_submodule(x) + ", C = " + format_submodule(c));
    }
  }
  for (size_t i = 0; i < nonexp.size(); ++i)
    for (size_t j = i; j < nonexp.size(); ++j) {
      ++n4.instances;
      if (!has(intersect(nonexp[i], nonexp[j]))) n4.fail(pair_str(nonexp[i], nonexp[j]));
    }
  for (size_t i = 0; i < mini.size(); ++i)
    for (size_t j = i + 1; j < mini.size(); ++j) {
      ++n3.instances;
      if (!expansion(intersect(mini[i], mini[j]), a)) n3.fail(pair_str(mini[i], mini[j]));
    }
  for (auto* c : {&n1, &n2, &n3, &n4, &n5, &n6, &n7, &n7any}) out.push_back(*c);

  CheckResult p1{"every non-expansion contains a postexpansion"}, p2a{"postexpansions lie in (A :_B m)"},
      p2b{"postexpansions are open or A'_i + A = A'"}, op{"postexpansions of A_i are open and lie in (A_i :_B m)"};
  for (const auto& c : nonexp) {
    ++p1.instances;
    bool over = false;
    for (const auto& x : post)
      if (c.contains(x)) over = true;
    if (!over) p1.fail(format_submodule(c));
  }
  Submodule colon_a = colon_m(a, b);
  for (const auto& x : post) {
    ++p2a.instances;
    if (!colon_a.contains(x)) p2a.fail(format_submodule(x));
    ++p2b.instances;
    if (ib(x) != x && sum(ib(x), a) != x) p2b.fail(format_submodule(x));
  }
  Submodule a0 = ib(a), colon_a0 = colon_m(a0, b);
  for (const auto& x : enumerate_postexpansions(in, a0, b).postexpansions) {
    ++op.instances;
    if (ib(x) != x || !colon_a0.contains(x)) op.fail(format_submodule(x));
  }
  for (auto* c : {&p1, &p2a, &p2b, &op}) out.push_back(*c);

  // comparisons over every expansion C of A
  CheckResult e1{"non-expansions of an expansion C are non-expansions of A"},
      e2{"D + C is a non-expansion of C for each non-expansion D of A"},
      e3{"each postexpansion of C is A' + C for a postexpansion A' of A"},
      contain{"a postexpansion stays one for every C with A <= C < it"};
  for (const auto& c : exps) {
    for (const auto& d : submodule_interval(c, b, bound)) {
      if (expansion(d, c)) continue;
      ++e1.instances;
      if (expansion(d, a)) e1.fail(pair_str(c, d));
    }
    for (const auto& d : nonexp) {
      ++e2.instances;
      if (expansion(sum(d, c), c)) e2.fail(pair_str(c, d));
    }
    for (const auto& x : post_of(c)) {
      ++e3.instances;
      bool found = false;
      for (const auto& y : post)
        if (sum(y, c) == x) found = true;
      if (!found) e3.fail(pair_str(c, x));
    }
  }
  for (const auto& x : post)
    for (const auto& c : submodule_interval(a, x, bound)) {
      if (c == x) continue;
      ++contain.instances;
      if (!contains_sub(post_of(c), x)) contain.fail(pair_str(c, x));
    }
  for (auto* c : {&e1, &e2, &e3, &contain}) out.push_back(*c);

  // functionals g in (B/A)^v with pi^{-1}(ker g) not containing A'
  CheckResult v1{"A' is a non-i-cover of A' meet ker g"}, v2{"A' is a postexpansion of A' meet ker g"},
      v3{"A' meet ker g is an expansion of A"};
  Submodule nd = dual_of_quotient(a, b);
  std::vector<Submodule> kernels;
  for (const auto& g : all_elements(nd)) {
    Submodule k = kernel_preimage(g, b);
    if (!contains_sub(kernels, k)) kernels.push_back(k);
  }
  for (const auto& x : post) {
    std::vector<Submodule> seen;
    for (const auto& k : kernels) {
      if (k.contains(x)) continue;
      Submodule y = intersect(x, k);
      if (contains_sub(seen, y)) continue;
      seen.push_back(y);
      ++v1.instances;
      if (!covers(x, y) || ib(y) == ib(x) || !ib(x).contains(ib(y))) v1.fail(pair_str(y, x));
      ++v2.instances;
      if (!contains_sub(post_of(y), x)) v2.fail(pair_str(y, x));
      ++v3.instances;
      if (!expansion(y, a)) v3.fail(format_submodule(y));
    }
  }
  for (auto* c : {&v1, &v2, &v3}) out.push_back(*c);

  // covers in the universe, read on both sides of the duality
  CheckResult c1{"(B/C)^v covers (B/A')^v iff C = A' meet ker g with (ker g :_B m) containing A'"},
      c2{"a cobasic C is a non-i-cover of each of its postexpansions"},
      c3{"a non-i-cover of A' is a postexpansion of A'"};
  for (const auto& lo : all)
    for (const auto& hi : all) {
      if (!hi.contains(lo) || hi == lo) continue;
      Submodule dlo = dual_of_quotient(lo, b), dhi = dual_of_quotient(hi, b);
      bool dual_cover = covers(dlo, dhi);
      bool form = false;
      for (const auto& g : all_elements(dlo)) {
        Submodule k = kernel_preimage(g, b);
        if (intersect(hi, k) == lo && colon_m(k, b).contains(hi)) {
          form = true;
          break;
        }
      }
      ++c1.instances;
      if (dual_cover != form) c1.fail(pair_str(lo, hi));
      if (covers(hi, lo) && ib(lo) != ib(hi)) {
        ++c3.instances;
        if (!contains_sub(post_of(lo), hi)) c3.fail(pair_str(lo, hi));
      }
    }
  for (const auto& c : all) {
    bool cobasic = true;
    for (const auto& d : upper_covers(c, b))
      if (expansion(d, c)) cobasic = false;
    if (!cobasic) continue;
    for (const auto& x : post_of(c)) {
      ++c2.instances;
      if (!covers(x, c) || ib(c) == ib(x)) c2.fail(pair_str(c, x));
    }
  }
  for (auto* c : {&c1, &c2, &c3}) out.push_back(*c);

  // hull, postcore and posthull
  auto exp_rep = enumerate_expansions(in, a, b, bound);
  CheckResult bounds{"hull, postcore and posthull bound their sets"};
  for (const auto& c : exp_rep.expansions) {
    ++bounds.instances;
    if (!exp_rep.hull.contains(c)) bounds.fail("hull misses " + format_submodule(c));
  }
  CheckResult h1{"postcore inside hull (when A is the postcore, or has one postexpansion and is not cobasic)"},
      h2{"hull inside posthull when A is cobasic"},
      h2m{"hull inside posthull when every postexpansion contains a maximal expansion"};
  h2m.disputed = true;
  if (!post.empty()) {
    Submodule postcore = intersect_all(post, b), posthull = sum_all(post, b);
    for (const auto& x : post) {
      ++bounds.instances;
      if (!x.contains(postcore) || !posthull.contains(x)) bounds.fail(format_submodule(x));
    }
    h1.applicable = postcore == a || (post.size() == 1 && !exp_rep.cobasic);
    if (h1.applicable) {
      ++h1.instances;
      if (!exp_rep.hull.contains(postcore))
        h1.fail("postcore " + format_submodule(postcore) + ", hull " + format_submodule(exp_rep.hull));
    }
    bool over_maximal = true;
    for (const auto& x : post) {
      bool found = false;
      for (const auto& c : exp_rep.maximal)
        if (x.contains(c)) found = true;
      over_maximal = over_maximal && found;
    }
    std::string rel = "hull " + format_submodule(exp_rep.hull) + ", posthull " + format_submodule(posthull);
    h2.applicable = exp_rep.cobasic;
    h2m.applicable = over_maximal;
    if (exp_rep.cobasic) {
      ++h2.instances;
      if (!posthull.contains(exp_rep.hull)) h2.fail(rel);
    }
    if (over_maximal) {
      ++h2m.instances;
      if (!posthull.contains(exp_rep.hull)) h2m.fail(rel);
    }
  } else {
    h1.applicable = h2.applicable = h2m.applicable = false;
  }
  for (auto* c : {&bounds, &h1, &h2, &h2m}) out.push_back(*c);

  // claimed: cospread(A') = cospread(A) + 1 for a postexpansion A'
  CheckResult cospread{"cospread of a postexpansion is one more than that of A"};
  cospread.disputed = true;
  if (exp_rep.cospread)
    for (const auto& x : post) {
      auto rx = enumerate_expansions(in, x, b, bound);
      if (!rx.cospread) continue;
      ++cospread.instances;
      if (*rx.cospread != *exp_rep.cospread + 1)
        cospread.fail(format_submodule(x) + " has cospread " + std::to_string(*rx.cospread) + ", A has " +
                      std::to_string(*exp_rep.cospread));
    }
  cospread.applicable = cospread.instances > 0;
  out.push_back(cospread);

  CheckResult form{"postexpansions of a strongly independent A have the intersection form"};
  auto cog = cogenerator_analysis(in, a, b, bound);
  form.applicable = cog.structure.applicable;
  if (form.applicable) {
    ++form.instances;
    if (!cog.structure.pass) form.fail(cog.structure.detail);
  }
  out.push_back(form);

  if (nonexp.empty())
    for (auto& c : out)
      if (c.instances == 0) c.applicable = false;
  return out;
}

std::vector<CheckResult> interior_comparison_suite(const PairOp& in1, const PairOp& in2, const Submodule& a,
                                                   const Submodule& b, long bound) {
  std::vector<CheckResult> out;
  auto all = submodule_interval(a, b, bound);
  CheckResult le{in1.name() + " <= " + in2.name() + " on the universe"};
  for (const auto& c : all) {
    ++le.instances;
    if (!in2(c, b).contains(in1(c, b))) le.fail(format_submodule(c));
  }
  out.push_back(le);
  if (!le.pass) return out;

  CheckResult f2a{"i1 absorbs i2 on both sides"}, f2b{"C_i2 is an i1-expansion of C_i1"};
  for (const auto& c : all) {
    Submodule c1 = in1(c, b), c2 = in2(c, b);
    ++f2a.instances;
    if (in2(c1, b) != c1 || in1(c2, b) != c1) f2a.fail(format_submodule(c));
    ++f2b.instances;
    if (!is_expansion(in1, c2, c1, b)) f2b.fail(format_submodule(c));
  }
  out.push_back(f2a);
  out.push_back(f2b);

  auto ne1 = [&](const Submodule& c) { return !is_expansion(in1, c, a, b); };
  auto ne2 = [&](const Submodule& c) { return !is_expansion(in2, c, a, b); };
  CheckResult s1{"C'_i1 inside C'_i2"}, s2{"C'_i1 nonempty forces C'_i2 nonempty"},
      s3{"C in C'_i2 is in C'_i1 iff not an i1-expansion"}, s4{"C_i2 + A in C'_i1 iff C in C'_i1"},
      s5{"(A :_C m) in C'_i1 iff C in C'_i1"};
  bool any1 = false, any2 = false;
  for (const auto& c : all) {
    if (ne1(c)) {
      any1 = true;
      ++s1.instances;
      if (!ne2(c)) s1.fail(format_submodule(c));
    }
    if (ne2(c)) any2 = true;
    if (!ne2(c)) continue;
    ++s3.instances;
    if (ne1(c) != !is_expansion(in1, c, a, b)) s3.fail(format_submodule(c));
    ++s4.instances;
    if (ne1(sum(in2(c, b), a)) != ne1(c)) s4.fail(format_submodule(c));
    ++s5.instances;
    if (ne1(colon_m(a, c)) != ne1(c)) s5.fail(format_submodule(c));
  }
  ++s2.instances;
  if (any1 && !any2) s2.fail("C'_i2 empty");
  for (auto* c : {&s1, &s2, &s3, &s4, &s5}) out.push_back(*c);

  auto post1 = enumerate_postexpansions(in1, a, b).postexpansions;
  auto post2 = enumerate_postexpansions(in2, a, b).postexpansions;
  CheckResult q1{"each i1-postexpansion contains an i2-postexpansion"},
      q2{"for A i1-open, i1-postexpansions are open for both"},
      q3{"for A i2-open, common postexpansions satisfy A' = A'_i2 = A'_i1 + A"},
      q4{"an i1-open i2-postexpansion is an i1-postexpansion"};
  for (const auto& x : post1) {
    ++q1.instances;
    bool found = false;
    for (const auto& y : post2)
      if (x.contains(y)) found = true;
    if (!found) q1.fail(format_submodule(x));
  }
  q2.applicable = in1(a, b) == a;
  if (q2.applicable)
    for (const auto& x : post1) {
      ++q2.instances;
      if (in1(x, b) != x || in2(x, b) != x) q2.fail(format_submodule(x));
    }
  q3.applicable = in2(a, b) == a;
  if (q3.applicable)
    for (const auto& x : post1) {
      if (!contains_sub(post2, x)) continue;
      ++q3.instances;
      if (in2(x, b) != x || sum(in1(x, b), a) != x) q3.fail(format_submodule(x));
    }
  for (const auto& x : post2) {
    if (in1(x, b) != x) continue;
    ++q4.instances;
    if (!contains_sub(post1, x)) q4.fail(format_submodule(x));
  }
  for (auto* c : {&q1, &q2, &q3, &q4}) out.push_back(*c);
  return out;
}

}  // namespace closurelab
