#include "closurelab/closures.hpp"

#include <fstream>
#include <sstream>

#include "closurelab/expr.hpp"

namespace closurelab {

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass && !r.disputed) return false;
  return true;
}

PairOp::PairOp(std::string name, Kind kind, Fn fn)
    : name_(std::move(name)), kind_(kind), fn_(std::move(fn)), memo_(std::make_shared<Memo>()) {}

Submodule PairOp::operator()(const Submodule& n, const Submodule& m) const {
  if (n.mod != m.mod) throw std::invalid_argument(name_ + ": N and M live in different modules");
  if (!m.contains(n)) throw std::invalid_argument(name_ + ": N is not contained in M");
  Key key{n.mod.get(), n.space, m.space};
  {
    std::lock_guard<std::mutex> g(memo_->mu);
    if (auto it = memo_->map.find(key); it != memo_->map.end()) return it->second;
  }
  Submodule out = fn_(n, m);
  std::lock_guard<std::mutex> g(memo_->mu);
  memo_->map.emplace(std::move(key), out);
  return out;
}

PairOp mbf_closure() {
  return PairOp("mbf", PairOp::Kind::Closure,
                [](const Submodule& n, const Submodule& m) { return colon_m(m_times(n), m); });
}

PairOp ord_closure() {
  return PairOp("ord", PairOp::Kind::Closure, [](const Submodule& n, const Submodule& m) {
    Submodule cur = m;
    while (true) {
      Submodule next = m_times(cur);
      if (next == cur || !next.contains(n)) return cur;
      cur = next;
    }
  });
}

int min_valuation(const Submodule& n) {
  if (n.dim() == 0) return -1;
  const auto& a = *n.mod->algebra();
  return a.degree(n.space.pivots().front());
}

PairOp integral_closure() {
  return PairOp("integral", PairOp::Kind::Closure, [](const Submodule& n, const Submodule& m) {
    const auto& a = *n.mod->algebra();
    if (a.backend() != Backend::Semigroup || !n.mod->is_regular())
      throw std::invalid_argument("integral closure is only available for ideals of a semigroup ring");
    if (n.dim() == 0) return n;
    int v = min_valuation(n);
    Subspace s(a.field(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
      if (a.degree(i) >= v) s.insert(a.basis_vector(i));
    return intersect(Submodule{n.mod, s}, m);
  });
}

PairOp identity_closure() {
  return PairOp("id", PairOp::Kind::Closure, [](const Submodule& n, const Submodule&) { return n; });
}

ClosureTable load_closure_table(const std::string& path, const ModulePtr& ring) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open closure table " + path);
  ClosureTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "name") {
      ls >> t.name;
    } else if (head == "source") {
      ls >> t.source;
    } else {
      auto arrow = line.find("->");
      if (arrow == std::string::npos)
        throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'ideal -> closure'");
      t.entries.emplace_back(parse_ideal(ring, line.substr(0, arrow)), parse_ideal(ring, line.substr(arrow + 2)));
    }
  }
  if (t.name.empty()) throw ParseError(path + ": table has no name");
  return t;
}

PairOp table_closure(const ClosureTable& t) {
  auto entries = t.entries;
  return PairOp("table:" + t.name, PairOp::Kind::Closure, [entries](const Submodule& n, const Submodule& m) {
    if (m != whole(m.mod)) throw UndefinedValue("table closures are tabulated for ideals only");
    for (const auto& [k, v] : entries)
      if (k == n) return v;
    throw UndefinedValue("no table entry for " + format_submodule(n));
  });
}

bool is_reduction(const PairOp& cl, const Submodule& l, const Submodule& n, const Submodule& m) {
  return n.contains(l) && cl(l, m).contains(n);
}

std::vector<CheckResult> check_closure_axioms(const PairOp& cl, const std::vector<Instance>& instances, long bound) {
  CheckResult ext{"extensive"}, idem{"idempotent"}, order{"order-preserving"}, order_sub{"order-preserving on submodules"},
      nak{"Nakayama"};
  for (const auto& [n, m] : instances) {
    Submodule c = cl(n, m);
    ++ext.instances;
    if (!c.contains(n) || !m.contains(c)) ext.fail(format_submodule(n));
    ++idem.instances;
    if (cl(c, m) != c) idem.fail(format_submodule(n));
    Submodule mn = m_times(n);
    for (const auto& l : submodule_interval(zero(n.mod), n, bound)) {
      ++order.instances;
      if (!c.contains(cl(l, m))) order.fail(format_submodule(l) + " <= " + format_submodule(n));
      ++order_sub.instances;
      if (!c.contains(cl(l, n))) order_sub.fail(format_submodule(l) + " <= " + format_submodule(n));
      if (cl(sum(l, mn), m).contains(n)) {
        ++nak.instances;
        if (!cl(l, m).contains(n)) nak.fail("L = " + format_submodule(l) + ", N = " + format_submodule(n));
      }
    }
  }
  return {ext, idem, order, order_sub, nak};
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::Less: return "<=";
    case Relation::Greater: return ">=";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

Comparison compare_ops(const PairOp& a, const PairOp& b, const std::vector<Instance>& instances) {
  Comparison c;
  bool a_in_b = true, b_in_a = true;
  for (const auto& [n, m] : instances) {
    Submodule x = a(n, m), y = b(n, m);
    if (!y.contains(x) && a_in_b) {
      a_in_b = false;
      c.a_not_in_b = format_submodule(n) + ": " + a.name() + " = " + format_submodule(x) + ", " + b.name() + " = " +
                     format_submodule(y);
    }
    if (!x.contains(y) && b_in_a) {
      b_in_a = false;
      c.b_not_in_a = format_submodule(n) + ": " + b.name() + " = " + format_submodule(y) + ", " + a.name() + " = " +
                     format_submodule(x);
    }
  }
  c.relation = a_in_b && b_in_a ? Relation::Equal
               : a_in_b         ? Relation::Less
               : b_in_a         ? Relation::Greater
                                : Relation::Incomparable;
  return c;
}

}  // namespace closurelab
