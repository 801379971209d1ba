#include "closurelab/specialpart.hpp"

#include <algorithm>

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

// every element of a submodule modulo a subspace of it, lifted through a complement
std::vector<Vec> lifts_mod(const Submodule& s, const Submodule& below) {
  auto comp = complement_basis(below.space, s.space);
  std::vector<Vec> out;
  const Fp& f = s.mod->field();
  for_each_vector(f, static_cast<int>(comp.size()), [&](const Vec& c) {
    Vec v = combine(f, s.mod->dim(), c, comp);
    if (!is_zero(v)) out.push_back(v);
  });
  return out;
}

// K = base + lifts of each (k-1)-dimensional subspace of L/(mL + base)
std::vector<Submodule> hyperplane_family(const Submodule& l, const Submodule& base, const Submodule& extra) {
  Submodule low = sum(m_times(l), base);
  auto comp = complement_basis(low.space, l.space);
  int k = static_cast<int>(comp.size());
  const Fp& f = l.mod->field();
  std::vector<Submodule> out;
  if (k == 0) return out;
  for (const auto& w : subspaces_of_dim(f, k, k - 1)) {
    std::vector<Vec> gens;
    for (const auto& c : w) gens.push_back(combine(f, l.mod->dim(), c, comp));
    out.push_back(sum(sum(base, generate(l.mod, gens)), extra));
  }
  return out;
}

bool closed(const PairOp& cl, const Submodule& i) { return cl(i, whole(i.mod)) == i; }

}  // namespace

SpecialPartOp::SpecialPartOp(std::string name, PairOp parent, Fn fn, int n_max)
    : name_(std::move(name)), parent_(std::move(parent)), fn_(std::move(fn)), n_max_(n_max) {}

Submodule SpecialPartOp::operator()(const Submodule& i) const {
  Submodule s = fn_(i);
  if (!s.contains(m_times(i)) || !closure(i).contains(s))
    throw SpecialPartViolation(name_ + ": mI <= I^sp <= I^cl fails at " + format_submodule(i));
  return s;
}

SpecialPartResult integral_special_part(const Submodule& i, int n_max) {
  const auto& a = *i.mod->algebra();
  if (a.backend() != Backend::Semigroup || !i.mod->is_regular())
    throw std::invalid_argument("the integral special part is only available for ideals of a semigroup ring");
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  SpecialPartResult out;
  out.sp = zero(i.mod);
  if (i.dim() == 0) {
    out.stabilized = true;
    return out;
  }
  int v = min_valuation(i), vm = min_valuation(maximal_ideal(i.mod));
  int best = -1;
  for (int n = 1; n <= n_max; ++n) {
    // smallest v(z) with n v(z) >= vm + n v
    int t = (vm + n * v + n - 1) / n;
    if (best < 0 || t < best) {
      best = t;
      out.settled_at = n;
    }
  }
  out.threshold = best;
  out.stabilized = n_max - out.settled_at >= 2;
  Subspace s(a.field(), a.dim());
  for (int k = 0; k < a.dim(); ++k)
    if (a.degree(k) >= best) s.insert(a.basis_vector(k));
  out.sp = Submodule{i.mod, s};
  return out;
}

SpecialPartOp integral_sp(int n_max) {
  return SpecialPartOp(
      "integral-sp", integral_closure(), [n_max](const Submodule& i) { return integral_special_part(i, n_max).sp; },
      n_max);
}

SpecialPartOp trivial_sp(const PairOp& cl) {
  return SpecialPartOp("m*", cl, [](const Submodule& i) { return m_times(i); });
}

SpecialPartOp closure_as_sp(const PairOp& cl) {
  return SpecialPartOp(cl.name() + "-as-sp", cl, [cl](const Submodule& i) { return cl(i, whole(i.mod)); });
}

std::vector<CheckResult> check_specialpart_axioms(const SpecialPartOp& sp, const std::vector<Submodule>& ideals,
                                                  const Submodule& floor, long bound) {
  const PairOp& cl = sp.parent();
  CheckResult ax1{"I^sp is an ideal"}, ax2{"mI <= I^sp <= I^cl"}, ax3{"(I^cl)^sp = I^sp = (I^sp)^cl"},
      ax4{"J <= I <= (J + I^sp)^cl implies I <= J^cl"}, mono{"J <= I implies J^sp <= I^sp"},
      indep{"mI = I meet I^sp for cl-independent I"}, repl{"replacing a generator of a minimal reduction by z in I^sp never gives a minimal reduction"},
      ext{"K extends to a minimal reduction of I mod J iff I^sp meet K <= mI + J"};
  for (const auto& i : ideals) {
    Submodule whole_ring = whole(i.mod);
    auto universe = submodule_interval(intersect(floor, i), i, bound);
    Submodule si = sp.raw(i);
    for (const auto& j : universe) {
      Submodule sj = sp.raw(j), cj = sp.closure(j);
      ++ax1.instances;
      if (!is_submodule(j.mod, sj.space)) ax1.fail(format_submodule(j));
      ++ax2.instances;
      if (!sj.contains(m_times(j)) || !cj.contains(sj)) ax2.fail(format_submodule(j));
      ++ax3.instances;
      if (sp.raw(cj) != sj || sp.closure(sj) != sj) ax3.fail(format_submodule(j));
      if (cl_independent(cl, minimal_generators(j), whole_ring)) {
        ++indep.instances;
        if (intersect(j, sj) != m_times(j)) indep.fail(format_submodule(j));
      }
      // pairs (J, I) with I the listed ideal
      ++mono.instances;
      if (!si.contains(sj)) mono.fail(pair_str(j, i));
      if (sp.closure(sum(j, si)).contains(i)) {
        ++ax4.instances;
        if (!cj.contains(i)) ax4.fail(pair_str(j, i));
      }
    }

    auto red = enumerate_reductions(cl, i, whole_ring);
    for (const auto& l : red.minimal) {
      auto gens = minimal_generators(l);
      for (size_t g = 0; g < gens.size(); ++g)
        for (const auto& z : lifts_mod(si, m_times(si))) {
          auto swapped = gens;
          swapped[g] = z;
          Submodule lz = generate(i.mod, swapped);
          ++repl.instances;
          if (contains_sub(red.minimal, lz)) repl.fail(format_submodule(l) + " with " + format_element(*i.mod, z));
        }
    }

    if (!closed(cl, i)) continue;
    Submodule mi = m_times(i);
    std::vector<Submodule> bases{intersect(floor, i)};
    for (const auto& j : universe)
      if (j != i && closed(cl, j) && !contains_sub(bases, j)) bases.push_back(j);
    for (const auto& j : bases) {
      auto minimal = enumerate_reductions(cl, i, whole_ring, {}, j).minimal;
      Submodule low = sum(mi, j);
      auto comp = complement_basis(low.space, i.space);
      const Fp& f = i.mod->field();
      for (const auto& w : all_subspaces(f, static_cast<int>(comp.size()))) {
        std::vector<Vec> gens;
        for (const auto& c : w) gens.push_back(combine(f, i.mod->dim(), c, comp));
        Submodule k = sum(j, generate(i.mod, gens));
        bool extends = false;
        for (const auto& l : minimal)
          if (l.contains(k)) extends = true;
        ++ext.instances;
        if (extends != low.contains(intersect(si, k))) ext.fail(pair_str(j, k));
      }
    }
  }
  return {ax1, ax2, ax3, ax4, mono, indep, repl, ext};
}

Verdict special_decomposition_check(const Submodule& i, const SpecialPartOp& sp) {
  Verdict v;
  Submodule whole_ring = whole(i.mod);
  if (i.dim() == 0) {
    v.detail = "zero ideal";
    return v;
  }
  Submodule s = sp(i), c = sp.closure(i);
  if (!strongly_cl_independent(sp.parent(), i, whole_ring)) {
    v.applicable = false;
    v.detail = "not strongly " + sp.parent().name() + "-independent; I + I^sp " + (sum(i, s) == c ? "=" : "!=") + " I^cl";
    return v;
  }
  if (sum(i, s) != c) {
    v.pass = false;
    v.detail = "I + I^sp = " + format_submodule(sum(i, s)) + " but I^cl = " + format_submodule(c);
    return v;
  }
  // with independent generators the sum is direct modulo mI
  if (intersect(i, s) != m_times(i)) {
    v.pass = false;
    v.detail = "I meet I^sp = " + format_submodule(intersect(i, s)) + " is larger than mI";
    return v;
  }
  v.detail = "I^cl = " + format_submodule(c) + " = I + " + format_submodule(s);
  return v;
}

std::optional<std::string> specialpart_hypotheses(const Submodule& i, const SpecialPartOp& sp) {
  const PairOp& cl = sp.parent();
  Submodule whole_ring = whole(i.mod);
  if (i.dim() == 0) return "I is zero";
  if (!closed(cl, i)) return format_submodule(i) + " is not " + cl.name() + "-closed";
  Submodule s;
  try {
    s = sp(i);
  } catch (const SpecialPartViolation& e) {
    return std::string(e.what());
  }
  if (sp.raw(sp.closure(i)) != s || sp.closure(s) != s) return "axiom 3 fails at " + format_submodule(i);
  auto red = enumerate_reductions(cl, i, whole_ring);
  if (!red.spread) return "spread is not uniform";
  for (const auto& l : red.minimal) {
    if (!strongly_cl_independent(cl, l, whole_ring))
      return "minimal reduction " + format_submodule(l) + " is not strongly independent";
    auto d = special_decomposition_check(l, sp);
    if (!d.pass) return "minimal reduction " + format_submodule(l) + ": " + d.detail;
  }
  return std::nullopt;
}

std::vector<Submodule> Fcl_set(const Submodule& j, const Submodule& i, const PairOp& cl) {
  if (!closed(cl, j) || !closed(cl, i)) throw std::invalid_argument("Fcl_set needs closed J and I");
  if (!i.contains(j)) throw std::invalid_argument("Fcl_set needs J inside I");
  std::vector<Submodule> out;
  for (const auto& k : lower_covers(i))
    if (k.contains(j) && closed(cl, k)) out.push_back(k);
  return sorted(out);
}

std::vector<Submodule> Fcl_family(const Submodule& j, const Submodule& i, const SpecialPartOp& sp) {
  Submodule s = sp(i);
  std::vector<Submodule> out;
  for (const auto& l : enumerate_reductions(sp.parent(), i, whole(i.mod), {}, j).minimal)
    for (const auto& k : hyperplane_family(l, j, s)) out.push_back(k);
  return sorted(out);
}

Verdict Fcl_check(const Submodule& j, const Submodule& i, const SpecialPartOp& sp) {
  Verdict v;
  if (auto why = specialpart_hypotheses(i, sp)) {
    v.applicable = false;
    v.detail = *why;
    return v;
  }
  auto set = Fcl_set(j, i, sp.parent());
  auto family = j == i ? std::vector<Submodule>{} : Fcl_family(j, i, sp);
  v.pass = set == family;
  v.detail = std::to_string(set.size()) + " closed colength-one ideals, " + std::to_string(family.size()) +
             " of the parametrized form";
  return v;
}

PreredSpecialPart prered_via_specialpart(const Submodule& i, const SpecialPartOp& sp) {
  PreredSpecialPart out;
  if (auto why = specialpart_hypotheses(i, sp)) {
    out.verdict.applicable = false;
    out.verdict.detail = *why;
    return out;
  }
  const PairOp& cl = sp.parent();
  Submodule whole_ring = whole(i.mod), s = sp(i);
  auto red = enumerate_reductions(cl, i, whole_ring);
  out.spread = red.spread;
  for (const auto& l : red.minimal)
    for (const auto& k : hyperplane_family(l, zero(i.mod), s)) out.family.push_back(k);
  out.family = sorted(out.family);
  out.prereductions = enumerate_prereductions(cl, i, whole_ring).prereductions;
  out.verdict.pass = out.family == out.prereductions;
  out.verdict.detail = "spread " + std::to_string(*red.spread) + ", " + std::to_string(out.family.size()) +
                       " of the form (y_1..y_{k-1}) + I^sp, " + std::to_string(out.prereductions.size()) +
                       " prereductions";
  return out;
}

}  // namespace closurelab
