#include "closurelab/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include "closurelab/duality.hpp"
#include "closurelab/expr.hpp"
#include "closurelab/render.hpp"
#include "closurelab/specialpart.hpp"

namespace closurelab {

namespace {

const std::set<std::string> kTaskKinds = {"closure",        "interior",  "dual",        "reductions",  "prereductions",
                                          "core-suite",     "expansions", "postexpansions", "cogenerators", "annihilator",
                                          "special-part",   "verify",    "lattice"};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// whitespace-separated tokens, keeping parenthesized groups (and anything
// glued to them) in one token
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ScenarioError("unbalanced parenthesis in \"" + s + "\"");
    if (depth == 0 && (c == ' ' || c == '\t')) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ScenarioError("unbalanced parenthesis in \"" + s + "\"");
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// split at top-level separators
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError(what + ": expected an integer, got \"" + s + "\"");
  }
}

void parse_ring(RingSpec& r, const std::vector<std::string>& t, int line) {
  auto err = [&](const std::string& m) { return ScenarioError("line " + std::to_string(line) + ": " + m); };
  if (t.size() < 2) throw err("ring needs a backend");
  r = RingSpec{};
  r.backend = t[1];
  if (r.backend != "semigroup" && r.backend != "quotient" && r.backend != "T")
    throw err("unknown ring backend " + r.backend);
  for (size_t i = 2; i < t.size(); ++i) {
    const std::string& k = t[i];
    auto next = [&]() -> const std::string& {
      if (i + 1 >= t.size()) throw err(k + " needs a value");
      return t[++i];
    };
    if (k == "p") {
      r.p = to_int(next(), "p");
    } else if (k == "D") {
      const std::string& v = next();
      if (v == "auto") r.D.reset();
      else r.D = to_int(v, "D");
    } else if (k == "rel") {
      r.relations.push_back(next());
    } else if (k == "vars") {
      r.vars.clear();
      while (i + 1 < t.size() && t[i + 1] != "rel" && t[i + 1] != "p" && t[i + 1] != "D") r.vars.push_back(t[++i]);
    } else if (r.backend == "semigroup") {
      r.generators.push_back(to_int(k, "semigroup generator"));
    } else {
      throw err("unexpected \"" + k + "\" in ring line");
    }
  }
  if (r.backend == "semigroup" && r.generators.empty()) throw err("semigroup ring needs generators");
  if (r.backend == "quotient" && r.relations.empty()) throw err("quotient ring needs at least one rel");
}

// total degrees of the monomials written in a text
std::vector<int> written_degrees(const std::string& text) {
  static const std::regex mono(R"(([a-z](\^[0-9]+)?)(\*[a-z](\^[0-9]+)?)*)");
  std::vector<int> out;
  for (std::sregex_iterator it(text.begin(), text.end(), mono), end; it != end; ++it) {
    std::string m = it->str();
    int d = 0;
    for (const auto& f : split_top(m, '*')) {
      auto c = f.find('^');
      d += c == std::string::npos ? 1 : std::stoi(f.substr(c + 1));
    }
    out.push_back(d);
  }
  return out;
}

std::vector<int> exponent_of(const std::vector<std::string>& vars, const std::string& mono) {
  std::vector<int> e(vars.size(), 0);
  for (const auto& f : split_top(mono, '*')) {
    auto c = f.find('^');
    std::string v = f.substr(0, c);
    int k = c == std::string::npos ? 1 : to_int(f.substr(c + 1), "relation exponent");
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw ScenarioError("relation uses unknown variable " + v);
    e[it - vars.begin()] += k;
  }
  return e;
}

// ---- typed task fields

using Value = std::variant<std::monostate, Submodule, std::vector<Submodule>, long, bool, std::string, ojson>;
using Fields = std::vector<std::pair<std::string, Value>>;

ojson sub_json(const Submodule& s) { return {{"generators", generator_strings(s)}, {"dim", s.dim()}}; }

ojson value_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> ojson {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, Submodule>) return sub_json(x);
        else if constexpr (std::is_same_v<T, std::vector<Submodule>>) {
          ojson a = ojson::array();
          for (const auto& s : x) a.push_back(sub_json(s));
          return a;
        } else return ojson(x);
      },
      v);
}

std::string value_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "none";
        else if constexpr (std::is_same_v<T, Submodule>) return format_submodule(x);
        else if constexpr (std::is_same_v<T, std::vector<Submodule>>) {
          std::string s;
          for (size_t i = 0; i < x.size(); ++i) s += (i ? "; " : "") + format_submodule(x[i]);
          return "[" + s + "]";
        } else if constexpr (std::is_same_v<T, long>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else return x.dump();
      },
      v);
}

Value opt_int(const std::optional<int>& v) { return v ? Value(static_cast<long>(*v)) : Value(); }
Value opt_sub(const std::optional<Submodule>& v) { return v ? Value(*v) : Value(); }

ojson check_json(const CheckResult& c) {
  ojson o{{"name", c.name}, {"pass", c.pass}, {"instances", c.instances}};
  if (!c.applicable) o["applicable"] = false;
  if (c.disputed) o["disputed"] = true;
  if (!c.pass) o["witness"] = c.witness;
  return o;
}

// ---- run context

// R_D is exact below degree D - d, d the least degree of a generator of m: an
// element there times m stays inside the truncation. Closure generators at or
// above that degree can come from the truncation socle alone, so an ideal's
// closure is reported as N plus its generators below the cut.
std::pair<Submodule, std::vector<std::string>> drop_truncation_tail(const Submodule& computed, const Submodule& n) {
  const auto& a = *n.mod->algebra();
  int d = a.truncation();
  for (int g : a.m_generators()) d = std::min(d, a.truncation() - a.degree(g));
  std::vector<Vec> keep;
  std::vector<std::string> dropped;
  for (const auto& g : minimal_generators(computed)) {
    int top = 0;
    for (size_t k = 0; k < g.size(); ++k)
      if (g[k]) top = std::max(top, a.degree(static_cast<int>(k)));
    if (top < d) keep.push_back(g);
    else if (!n.contains(g)) dropped.push_back(format_element(*n.mod, g));
  }
  return {sum(n, generate(n.mod, keep)), dropped};
}


struct Context {
  AlgebraPtr a;
  ModulePtr R;
  std::map<std::string, Submodule> ideals;  // for the ideal expression parser
  std::map<std::string, Submodule> named;   // ideals and hull submodules
  std::map<std::string, ClosureTable> tables;
  RunOptions opt;
  long bound = default_enumeration_bound();

  std::mutex mu;
  std::map<std::string, PairOp> ops;

  ModulePtr E() const {
    if (a->backend() != Backend::Semigroup) throw ScenarioError("the injective hull E needs a semigroup ring");
    return injective_hull(R);
  }

  PairOp closure(const std::string& name) {
    std::lock_guard<std::mutex> g(mu);
    return closure_locked(name);
  }
  PairOp interior(const std::string& name) {
    std::lock_guard<std::mutex> g(mu);
    return interior_locked(name);
  }
  bool is_op_name(const std::string& name) const {
    return name == "mbf" || name == "ord" || name == "integral" || name == "id" || name == "mbe" ||
           name.rfind("table:", 0) == 0 || name.rfind("dual:", 0) == 0;
  }

  std::optional<Submodule> floor(const std::map<std::string, std::string>& kw) const {
    auto it = kw.find("floor");
    if (it == kw.end()) return std::nullopt;
    int t = to_int(it->second, "floor");
    std::vector<Vec> gens;
    for (int i = 0; i < a->dim(); ++i)
      if (a->degree(i) >= t) gens.push_back(a->basis_vector(i));
    return generate(R, gens);
  }

  Submodule resolve(const std::string& raw) {
    std::string text = trim(raw);
    if (text.empty()) throw ScenarioError("empty submodule expression");
    if (auto it = named.find(text); it != named.end()) return it->second;
    if (text == "E") return whole(E());
    if (text.rfind("ann ", 0) == 0) return annihilated_by(resolve(text.substr(4)));
    if (text.rfind("span ", 0) == 0) {
      ModulePtr e = E();
      std::vector<Vec> gens;
      for (const auto& l : split_top(text.substr(5), ',')) {
        int j = 0;
        while (j < e->dim() && e->label(j) != l) ++j;
        if (j == e->dim()) throw ScenarioError("E has no basis element " + l);
        Vec v(e->dim(), 0);
        v[j] = 1;
        gens.push_back(v);
      }
      return generate(e, gens);
    }
    static const std::regex apply(R"(^([A-Za-z][A-Za-z0-9_:]*)\((.*)\)$)");
    std::smatch m;
    if (std::regex_match(text, m, apply) && is_op_name(m[1].str())) {
      std::string op = m[1].str();
      Submodule inner = resolve(m[2].str());
      PairOp p = op == "mbe" || op.rfind("dual:", 0) == 0 ? interior(op) : closure(op);
      return reported(p, inner, whole(inner.mod)).first;
    }
    try {
      return parse_ideal(R, text, ideals);
    } catch (const ParseError& e) {
      throw ScenarioError(e.what());
    }
  }

  // p(N, M) as reported: closures of ideals without the truncation socle
  std::pair<Submodule, std::vector<std::string>> reported(const PairOp& p, const Submodule& n, const Submodule& m) {
    Submodule v = p(n, m);
    if (p.is_closure() && n.mod->is_regular() && m == whole(n.mod)) return drop_truncation_tail(v, n);
    return {v, {}};
  }

  std::vector<Submodule> resolve_list(const std::string& text) {
    // [a; b; c] in expectations, a,b,c in task arguments
    std::string t = trim(text);
    char sep = ',';
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
      t = t.substr(1, t.size() - 2);
      sep = ';';
    }
    std::vector<Submodule> out;
    for (const auto& part : split_top(t, sep)) out.push_back(resolve(part));
    return out;
  }

 private:
  PairOp closure_locked(const std::string& name) {
    if (auto it = ops.find("c:" + name); it != ops.end()) return it->second;
    PairOp p;
    if (name == "mbf") p = mbf_closure();
    else if (name == "ord") p = ord_closure();
    else if (name == "integral") p = integral_closure();
    else if (name == "id") p = identity_closure();
    else if (name.rfind("table:", 0) == 0) {
      auto it = tables.find(name.substr(6));
      if (it == tables.end()) throw ScenarioError("no table named " + name.substr(6));
      p = table_closure(it->second);
    } else if (name.rfind("dual:", 0) == 0) {
      p = dual_op(interior_locked(name.substr(5)));
    } else {
      throw ScenarioError("unknown closure " + name);
    }
    ops.emplace("c:" + name, p);
    return p;
  }
  PairOp interior_locked(const std::string& name) {
    if (auto it = ops.find("i:" + name); it != ops.end()) return it->second;
    PairOp p;
    if (name == "mbe") p = mbe_interior();
    else if (name == "id") p = identity_interior();
    else if (name.rfind("dual:", 0) == 0) p = dual_op(closure_locked(name.substr(5)));
    else throw ScenarioError("unknown interior " + name);
    ops.emplace("i:" + name, p);
    return p;
  }
};

struct Args {
  std::vector<std::string> pos;
  std::map<std::string, std::string> kw;
};

Args split_keywords(const std::vector<std::string>& tokens) {
  static const std::set<std::string> keys = {"in", "base", "floor", "nmax"};
  Args a;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (keys.count(tokens[i]) && i + 1 < tokens.size()) {
      a.kw[tokens[i]] = tokens[i + 1];
      ++i;
    } else {
      a.pos.push_back(tokens[i]);
    }
  }
  return a;
}

const std::string& need(const Args& a, size_t i, const std::string& what) {
  if (i >= a.pos.size()) throw ScenarioError("missing " + what);
  return a.pos[i];
}

struct Outcome {
  Fields fields;
  std::optional<bool> verified;  // empty: informational
  std::string witness;
  bool sampled = false;
};

void add_checks(Outcome& o, const std::vector<CheckResult>& rs) {
  ojson arr = ojson::array();
  long instances = 0;
  for (const auto& c : rs) {
    arr.push_back(check_json(c));
    instances += c.instances;
    if (!c.pass && !c.disputed && o.witness.empty()) o.witness = c.name + ": " + c.witness;
  }
  o.fields.emplace_back("instances", instances);
  o.fields.emplace_back("checks", arr);
  o.verified = all_pass(rs);
}

void add_verdict(Outcome& o, const Verdict& v) {
  o.fields.emplace_back("applicable", v.applicable);
  o.fields.emplace_back("pass", v.pass);
  o.fields.emplace_back("detail", v.detail);
  if (v.applicable) {
    o.verified = v.pass;
    if (!v.pass) o.witness = v.detail;
  }
}

SpecialPartOp special_part(const std::string& name, const Args& a) {
  if (name != "integral") throw ScenarioError("the only special part available is integral, not " + name);
  int n = a.kw.count("nmax") ? to_int(a.kw.at("nmax"), "nmax") : 12;
  return integral_sp(n);
}

Outcome run_verify(Context& cx, const Args& a) {
  const std::string& what = need(a, 0, "verify check name");
  Outcome o;
  auto in_or_whole = [&](const Submodule& n) { return a.kw.count("in") ? cx.resolve(a.kw.at("in")) : whole(n.mod); };
  auto floored = [&](const Submodule& n) {
    auto f = cx.floor(a.kw);
    return f ? intersect(*f, n) : zero(n.mod);
  };
  if (what == "closure-axioms") {
    std::vector<Instance> inst;
    for (const auto& n : cx.resolve_list(need(a, 2, "ideal list"))) inst.push_back({n, whole(n.mod)});
    add_checks(o, check_closure_axioms(cx.closure(need(a, 1, "closure")), inst, cx.bound));
  } else if (what == "interior-axioms") {
    std::vector<Instance> inst;
    for (const auto& n : cx.resolve_list(need(a, 2, "submodule list"))) inst.push_back({n, in_or_whole(n)});
    add_checks(o, check_interior_axioms(cx.interior(need(a, 1, "interior")), inst, cx.bound));
  } else if (what == "nonreduction-suite") {
    Submodule n = cx.resolve(need(a, 2, "N"));
    add_checks(o, nonreduction_suite(cx.closure(need(a, 1, "closure")), n, in_or_whole(n), floored(n), cx.bound));
  } else if (what == "comparison-suite") {
    Submodule n = cx.resolve(need(a, 3, "N"));
    add_checks(o, comparison_suite(cx.closure(need(a, 1, "closure")), cx.closure(need(a, 2, "closure")), n,
                                   in_or_whole(n), floored(n), cx.bound));
  } else if (what == "nonexpansion-suite") {
    Submodule x = cx.resolve(need(a, 2, "A"));
    o.fields.emplace_back("length", static_cast<long>(in_or_whole(x).dim() - x.dim()));
    add_checks(o, nonexpansion_suite(cx.interior(need(a, 1, "interior")), x, in_or_whole(x), cx.bound));
  } else if (what == "interior-comparison") {
    Submodule x = cx.resolve(need(a, 3, "A"));
    add_checks(o, interior_comparison_suite(cx.interior(need(a, 1, "interior")), cx.interior(need(a, 2, "interior")),
                                            x, in_or_whole(x), cx.bound));
  } else if (what == "duality") {
    Submodule x = cx.resolve(need(a, 3, "A"));
    o.fields.emplace_back("length", static_cast<long>(in_or_whole(x).dim() - x.dim()));
    add_checks(o, duality_identities(cx.closure(need(a, 1, "closure")), cx.interior(need(a, 2, "interior")), x,
                                     in_or_whole(x), cx.bound));
  } else if (what == "correspondence") {
    Submodule x = cx.resolve(need(a, 3, "A"));
    o.fields.emplace_back("length", static_cast<long>(in_or_whole(x).dim() - x.dim()));
    add_checks(o, correspondence_check(cx.closure(need(a, 1, "closure")), cx.interior(need(a, 2, "interior")), x,
                                       in_or_whole(x), cx.bound));
  } else if (what == "sum-intersect") {
    add_verdict(o, sum_intersect_duality_check(cx.resolve(need(a, 1, "B")), cx.resolve_list(need(a, 2, "family"))));
  } else if (what == "structure") {
    Submodule n = cx.resolve(need(a, 2, "N"));
    add_verdict(o, basic_structure_check(cx.closure(need(a, 1, "closure")), n, in_or_whole(n)));
  } else if (what == "union-prereductions") {
    Submodule n = cx.resolve(need(a, 2, "N"));
    std::optional<Submodule> base;
    if (a.kw.count("base")) base = cx.resolve(a.kw.at("base"));
    add_verdict(o, union_prereductions_check(cx.closure(need(a, 1, "closure")), n, in_or_whole(n), base));
  } else if (what == "compare") {
    std::vector<Instance> inst;
    for (const auto& n : cx.resolve_list(need(a, 3, "ideal list"))) inst.push_back({n, whole(n.mod)});
    PairOp p = cx.closure(need(a, 1, "closure")), q = cx.closure(need(a, 2, "closure"));
    std::string p_not_q, q_not_p;
    for (const auto& [n, m] : inst) {
      Submodule x = cx.reported(p, n, m).first, y = cx.reported(q, n, m).first;
      std::string at = format_submodule(n) + ": " + p.name() + " = " + format_submodule(x) + ", " + q.name() + " = " +
                       format_submodule(y);
      if (p_not_q.empty() && !y.contains(x)) p_not_q = at;
      if (q_not_p.empty() && !x.contains(y)) q_not_p = at;
    }
    std::string rel = p_not_q.empty() ? (q_not_p.empty() ? "equal" : "<=") : (q_not_p.empty() ? ">=" : "incomparable");
    o.fields.emplace_back("relation", rel);
    o.fields.emplace_back("first_not_in_second", p_not_q);
    o.fields.emplace_back("second_not_in_first", q_not_p);
    o.verified = true;
  } else if (what == "oracle") {
    // the lifted walk only produces L whose generators stay independent modulo mN
    PairOp cl = cx.closure(need(a, 1, "closure"));
    Submodule n = cx.resolve(need(a, 2, "N"));
    Submodule m = in_or_whole(n), mn = m_times(n);
    auto rep = enumerate_reductions(cl, n, m, EnumOptions{cx.bound, 0, cx.opt.seed});
    auto naive = naive_reductions(cl, n, m);
    std::vector<Submodule> lifted_naive;
    for (const auto& l : naive)
      if (l.dim() - m_times(l).dim() == sum(l, mn).dim() - mn.dim()) lifted_naive.push_back(l);
    std::sort(lifted_naive.begin(), lifted_naive.end());
    auto lifted = rep.reductions;
    std::sort(lifted.begin(), lifted.end());
    o.fields.emplace_back("dim", static_cast<long>(n.dim()));
    o.fields.emplace_back("naive_reductions", static_cast<long>(naive.size()));
    o.fields.emplace_back("lifted_reductions", static_cast<long>(lifted.size()));
    o.fields.emplace_back("minimal", rep.minimal);
    o.fields.emplace_back("core", rep.core);
    if (lifted != lifted_naive) {
      o.witness = "lifted and naive reductions differ";
      for (const auto& s : lifted_naive)
        if (!std::binary_search(lifted.begin(), lifted.end(), s)) o.witness = "missed by lifting: " + format_submodule(s);
    } else if (rep.minimal != minimal_elements(naive)) {
      o.witness = "minimal reductions differ from the naive ones";
    } else if (rep.core != intersect_all(naive, n)) {
      o.witness = "core differs: naive gives " + format_submodule(intersect_all(naive, n));
    }
    o.verified = o.witness.empty();
  } else if (what == "sp-axioms") {
    auto sp = special_part(need(a, 1, "special part"), a);
    auto ideals = cx.resolve_list(need(a, 2, "ideal list"));
    auto f = cx.floor(a.kw);
    add_checks(o, check_specialpart_axioms(sp, ideals, f ? *f : zero(cx.R), cx.bound));
  } else if (what == "sp-decomposition") {
    add_verdict(o, special_decomposition_check(cx.resolve(need(a, 2, "I")), special_part(need(a, 1, "special part"), a)));
  } else if (what == "fcl") {
    auto sp = special_part(need(a, 1, "special part"), a);
    Submodule j = cx.resolve(need(a, 2, "J")), i = cx.resolve(need(a, 3, "I"));
    o.fields.emplace_back("set", Fcl_set(j, i, sp.parent()));
    add_verdict(o, Fcl_check(j, i, sp));
  } else if (what == "prered-sp") {
    auto r = prered_via_specialpart(cx.resolve(need(a, 2, "I")), special_part(need(a, 1, "special part"), a));
    o.fields.emplace_back("spread", opt_int(r.spread));
    o.fields.emplace_back("family", r.family);
    o.fields.emplace_back("prereductions", r.prereductions);
    add_verdict(o, r.verdict);
  } else {
    throw ScenarioError("unknown verify check " + what);
  }
  return o;
}

EnumOptions enum_options(const Context& cx) { return EnumOptions{cx.bound, cx.opt.sample, cx.opt.seed}; }

Outcome run_lattice(Context& cx, const TaskSpec& t, RunOutput& out, std::mutex& out_mu) {
  const std::string& name = t.args.empty() ? throw ScenarioError("lattice needs a name") : t.args[0];
  LatticePicture pic = lattice_frame(cx.a, t.xmax, t.ymax, t.title.empty() ? name : t.title);
  for (const auto& l : t.layers) {
    LatticeLayer layer;
    layer.kind = l.kind == "ring" ? LatticeLayer::Kind::Ring : LatticeLayer::Kind::Fill;
    layer.color = l.color;
    layer.name = !l.label.empty() ? l.label : l.expr + (l.minus.empty() ? "" : " minus " + l.minus);
    static const std::regex table_use(R"(table:([A-Za-z0-9_]+)\()");
    std::smatch m;
    if (std::regex_search(l.expr, m, table_use)) layer.source = cx.tables.at(m[1].str()).source;
    std::optional<Submodule> minus;
    if (!l.minus.empty()) minus = cx.resolve(l.minus);
    layer.points = monomial_points(cx.resolve(l.expr), pic.xmax, pic.ymax, minus);
    pic.layers.push_back(std::move(layer));
  }
  Outcome o;
  ojson layers = ojson::array();
  for (const auto& l : pic.layers) {
    ojson pts = ojson::array();
    for (const auto& [x, y] : l.points) pts.push_back({x, y});
    layers.push_back({{"name", l.name},
                      {"kind", l.kind == LatticeLayer::Kind::Ring ? "ring" : "fill"},
                      {"color", l.color},
                      {"source", l.source},
                      {"points", pts}});
  }
  std::string ascii = render_ascii(pic);
  o.fields.emplace_back("svg", name + ".svg");
  o.fields.emplace_back("layers", layers);
  o.fields.emplace_back("ascii", ascii);
  std::lock_guard<std::mutex> g(out_mu);
  out.svgs[name + ".svg"] = render_svg(pic);
  out.ascii[name] = ascii;
  return o;
}

Outcome run_task(Context& cx, const TaskSpec& t, RunOutput& out, std::mutex& out_mu) {
  Args a = split_keywords(t.args);
  Outcome o;
  auto in_or_whole = [&](const Submodule& n) { return a.kw.count("in") ? cx.resolve(a.kw.at("in")) : whole(n.mod); };
  std::optional<Submodule> base;
  if (a.kw.count("base")) base = cx.resolve(a.kw.at("base"));

  if (t.kind == "closure" || t.kind == "interior" || t.kind == "dual") {
    const std::string& op = need(a, 0, "operation");
    Submodule n = cx.resolve(need(a, 1, "submodule"));
    PairOp p = t.kind == "closure" ? cx.closure(op) : t.kind == "interior" ? cx.interior(op) : PairOp();
    if (t.kind == "dual") {
      bool is_interior = op == "mbe" || op.rfind("dual:", 0) == 0;
      p = dual_op(is_interior ? cx.interior(op) : cx.closure(op));
      o.fields.emplace_back("kind", std::string(p.is_closure() ? "closure" : "interior"));
    }
    auto [v, dropped] = cx.reported(p, n, in_or_whole(n));
    o.fields.emplace_back("value", v);
    if (!dropped.empty()) o.fields.emplace_back("truncation_socle", ojson(dropped));
  } else if (t.kind == "reductions") {
    Submodule n = cx.resolve(need(a, 1, "N"));
    auto r = enumerate_reductions(cx.closure(need(a, 0, "closure")), n, in_or_whole(n), enum_options(cx), base);
    o.fields.emplace_back("minimal", r.minimal);
    o.fields.emplace_back("core", r.core);
    o.fields.emplace_back("spread", opt_int(r.spread));
    o.fields.emplace_back("basic", r.basic);
    o.fields.emplace_back("reductions", static_cast<long>(r.reductions.size()));
    o.fields.emplace_back("mode", mode_name(r.mode));
    o.sampled = r.mode == EnumMode::Sampled;
  } else if (t.kind == "prereductions") {
    Submodule n = cx.resolve(need(a, 1, "N"));
    auto r = enumerate_prereductions(cx.closure(need(a, 0, "closure")), n, in_or_whole(n), base);
    o.fields.emplace_back("prereductions", r.prereductions);
    o.fields.emplace_back("precore", opt_sub(r.precore));
    o.fields.emplace_back("prehull", opt_sub(r.prehull));
  } else if (t.kind == "core-suite") {
    PairOp cl = cx.closure(need(a, 0, "closure"));
    Submodule n = cx.resolve(need(a, 1, "N"));
    Submodule m = in_or_whole(n);
    auto red = enumerate_reductions(cl, n, m, enum_options(cx), base);
    auto pre = enumerate_prereductions(cl, n, m, base);
    o.fields.emplace_back("precore", opt_sub(pre.precore));
    o.fields.emplace_back("core", red.core);
    o.fields.emplace_back("prehull", opt_sub(pre.prehull));
    o.fields.emplace_back("minimal_reductions", red.minimal);
    o.fields.emplace_back("prereductions", pre.prereductions);
    o.sampled = red.mode == EnumMode::Sampled;
  } else if (t.kind == "expansions") {
    Submodule x = cx.resolve(need(a, 1, "A"));
    auto r = enumerate_expansions(cx.interior(need(a, 0, "interior")), x, in_or_whole(x), cx.bound);
    o.fields.emplace_back("maximal", r.maximal);
    o.fields.emplace_back("hull", r.hull);
    o.fields.emplace_back("cobasic", r.cobasic);
    o.fields.emplace_back("cospread", opt_int(r.cospread));
    o.fields.emplace_back("expansions", static_cast<long>(r.expansions.size()));
  } else if (t.kind == "postexpansions") {
    Submodule x = cx.resolve(need(a, 1, "A"));
    Submodule b = in_or_whole(x);
    auto r = enumerate_postexpansions(cx.interior(need(a, 0, "interior")), x, b);
    o.fields.emplace_back("postexpansions", r.postexpansions);
    o.fields.emplace_back("postcore", opt_sub(r.postcore));
    o.fields.emplace_back("posthull", opt_sub(r.posthull));
    if (!x.mod->is_regular() && b == whole(b.mod) && dual_module(x.mod) == cx.R) {
      std::vector<Submodule> ann;
      for (const auto& c : r.postexpansions) ann.push_back(annihilator(c, cx.R));
      std::sort(ann.begin(), ann.end());
      o.fields.emplace_back("annihilators", ann);
    }
  } else if (t.kind == "cogenerators") {
    Submodule x = cx.resolve(need(a, 1, "A"));
    Submodule b = in_or_whole(x);
    auto r = cogenerator_analysis(cx.interior(need(a, 0, "interior")), x, b, cx.bound);
    o.fields.emplace_back("count", static_cast<long>(cogenerator_count(x, b)));
    o.fields.emplace_back("kernels", r.kernels);
    o.fields.emplace_back("independent", r.independent);
    o.fields.emplace_back("strongly_independent", r.strongly_independent);
    o.fields.emplace_back("cospread", opt_int(r.cospread));
    add_verdict(o, r.structure);
  } else if (t.kind == "annihilator") {
    o.fields.emplace_back("value", annihilator(cx.resolve(need(a, 0, "submodule")), cx.R));
  } else if (t.kind == "special-part") {
    special_part(need(a, 0, "special part"), a);
    int nmax = a.kw.count("nmax") ? to_int(a.kw.at("nmax"), "nmax") : 12;
    auto r = integral_special_part(cx.resolve(need(a, 1, "I")), nmax);
    o.fields.emplace_back("sp", r.sp);
    o.fields.emplace_back("threshold", static_cast<long>(r.threshold));
    o.fields.emplace_back("stabilized", r.stabilized);
    o.fields.emplace_back("settled_at", static_cast<long>(r.settled_at));
  } else if (t.kind == "verify") {
    o = run_verify(cx, a);
  } else if (t.kind == "lattice") {
    o = run_lattice(cx, t, out, out_mu);
  } else {
    throw ScenarioError("unknown task " + t.kind);
  }
  return o;
}

// expected values are read in the type of the computed field
std::string check_expect(Context& cx, const Value& got, const std::string& field, const std::string& text) {
  if (std::holds_alternative<Submodule>(got)) {
    Submodule want = cx.resolve(text);
    const auto& g = std::get<Submodule>(got);
    if (want == g) return "";
    return field + ": expected " + format_submodule(want) + ", got " + format_submodule(g);
  }
  if (std::holds_alternative<std::vector<Submodule>>(got)) {
    auto want = cx.resolve_list(text);
    auto g = std::get<std::vector<Submodule>>(got);
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    std::sort(g.begin(), g.end());
    if (want == g) return "";
    std::string missing, extra;
    for (const auto& s : want)
      if (!std::binary_search(g.begin(), g.end(), s)) missing += (missing.empty() ? "" : "; ") + format_submodule(s);
    for (const auto& s : g)
      if (!std::binary_search(want.begin(), want.end(), s)) extra += (extra.empty() ? "" : "; ") + format_submodule(s);
    return field + ": missing [" + missing + "], unexpected [" + extra + "]";
  }
  std::string g = value_text(got);
  if (g == trim(text)) return "";
  return field + ": expected " + trim(text) + ", got " + g;
}

TaskResult execute(Context& cx, const TaskSpec& t, int id, RunOutput& out, std::mutex& out_mu) {
  TaskResult r;
  r.id = id;
  r.kind = t.kind;
  for (size_t i = 0; i < t.args.size(); ++i) r.args += (i ? " " : "") + t.args[i];
  try {
    Outcome o = run_task(cx, t, out, out_mu);
    std::string expect_fail;
    for (const auto& [field, text] : t.expects) {
      auto it = std::find_if(o.fields.begin(), o.fields.end(), [&](const auto& f) { return f.first == field; });
      if (it == o.fields.end()) throw ScenarioError("line " + std::to_string(t.line) + ": task has no field " + field);
      std::string w = check_expect(cx, it->second, field, text);
      if (!w.empty() && expect_fail.empty()) expect_fail = w;
    }
    for (const auto& [k, v] : o.fields) r.fields[k] = value_json(v);
    r.sampled = o.sampled;
    bool verified = o.verified.has_value() || !t.expects.empty();
    bool ok = o.verified.value_or(true) && expect_fail.empty();
    r.status = !verified ? "info" : ok ? "pass" : "fail";
    if (!ok) r.witness = o.verified.value_or(true) ? expect_fail : o.witness;
  } catch (const SpecialPartViolation& e) {
    r.status = "fail";
    r.witness = e.what();
  } catch (const EnumerationBound& e) {
    r.status = "error";
    r.witness = std::string(e.what()) + "; rerun with --sample N or raise CLOSURE_LAB_MAX_ENUM";
  } catch (const std::exception& e) {
    r.status = "error";
    r.witness = "line " + std::to_string(t.line) + ": " + e.what();
  }
  return r;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name, const std::filesystem::path& base_dir) {
  Scenario s;
  s.name = name;
  s.base_dir = base_dir;
  bool have_ring = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    auto err = [&](const std::string& m) { return ScenarioError(name + ":" + std::to_string(lineno) + ": " + m); };
    bool continuation = line[0] == ' ' || line[0] == '\t';
    line = trim(line);
    std::string head = line.substr(0, line.find_first_of(" \t"));
    std::string rest = head.size() < line.size() ? trim(line.substr(head.size())) : "";

    if (continuation) {
      if (s.tasks.empty()) throw err("indented line outside a task");
      TaskSpec& t = s.tasks.back();
      if (head == "expect") {
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw err("expect needs 'field = value'");
        t.expects.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
      } else if (head == "title" && t.kind == "lattice") {
        t.title = rest;
      } else if (head == "layer" && t.kind == "lattice") {
        auto tok = split_args(rest);
        if (tok.size() < 3 || (tok[0] != "fill" && tok[0] != "ring")) throw err("layer fill|ring <color> <expr>");
        LayerSpec l{tok[0], tok[1], tok[2], "", ""};
        for (size_t i = 3; i < tok.size(); ++i) {
          if (tok[i] == "minus" && i + 1 < tok.size()) {
            l.minus = tok[++i];
          } else if (tok[i] == "label") {
            for (size_t j = i + 1; j < tok.size(); ++j) l.label += (j > i + 1 ? " " : "") + tok[j];
            break;
          } else {
            throw err("unexpected \"" + tok[i] + "\" in layer");
          }
        }
        t.layers.push_back(l);
      } else {
        throw err("unknown task option " + head);
      }
      continue;
    }

    auto tok = split_args(line);
    if (head == "scenario") {
      s.name = rest;
    } else if (head == "version") {
      s.version = to_int(rest, "version");
      if (s.version != 1) throw err("unsupported scenario version " + rest);
    } else if (head == "ring") {
      parse_ring(s.ring, tok, lineno);
      have_ring = true;
    } else if (head == "table") {
      if (tok.size() != 3) throw err("table <name> <path>");
      s.tables.emplace_back(tok[1], tok[2]);
    } else if (head == "ideal" || head == "hull") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw err(head + " <name> = <expression>");
      Declaration d{lineno, head, trim(rest.substr(0, eq)), trim(rest.substr(eq + 1))};
      static const std::regex ident(R"([A-Za-z][A-Za-z0-9_]*)");
      if (!std::regex_match(d.name, ident)) throw err("bad name " + d.name);
      if (d.name == "m" || d.name == "R" || d.name == "E") throw err(d.name + " is reserved");
      for (const auto& o : s.decls)
        if (o.name == d.name) throw err("duplicate name " + d.name);
      s.decls.push_back(d);
    } else if (head == "output") {
      if (rest != "json" && rest != "md") throw err("output json|md");
      s.format = rest;
    } else if (head == "expect-exit") {
      s.expect_exit = to_int(rest, "expect-exit");
    } else if (kTaskKinds.count(head)) {
      TaskSpec t;
      t.line = lineno;
      t.kind = head;
      t.args.assign(tok.begin() + 1, tok.end());
      if (head == "lattice") {
        std::vector<std::string> keep;
        for (size_t i = 0; i < t.args.size(); ++i) {
          if (t.args[i] == "window" && i + 2 < t.args.size()) {
            t.xmax = to_int(t.args[i + 1], "window");
            t.ymax = to_int(t.args[i + 2], "window");
            i += 2;
          } else {
            keep.push_back(t.args[i]);
          }
        }
        t.args = keep;
      }
      s.tasks.push_back(std::move(t));
    } else {
      throw err("unknown directive " + head);
    }
  }
  if (!have_ring) throw ScenarioError(name + ": no ring declared");
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path.stem().string(), path.parent_path());
}

int resolve_truncation(const Scenario& s) {
  if (s.ring.D) return *s.ring.D;
  std::vector<int> degrees;
  auto add = [&](const std::string& t) {
    for (int d : written_degrees(t)) degrees.push_back(d);
  };
  for (const auto& d : s.decls) add(d.expr);
  for (const auto& t : s.tasks) {
    for (const auto& a : t.args) add(a);
    for (const auto& [f, v] : t.expects) add(v);
  }
  if (s.ring.backend == "semigroup") {
    NumericalSemigroup sg(s.ring.generators);
    // the ring itself needs D > conductor + 2 * max generator
    int floor_D = sg.conductor() + 2 * sg.max_generator() + 1;
    return std::max(auto_truncation(degrees, sg.conductor(), sg.max_generator()), floor_D + floor_D % 2);
  }
  if (s.ring.backend == "T") return auto_truncation(degrees, 4, 5);
  int rel = 0;
  for (const auto& r : s.ring.relations) {
    auto e = exponent_of(s.ring.vars, r);
    int d = 0;
    for (int k : e) d += k;
    rel = std::max(rel, d);
  }
  return auto_truncation(degrees, rel, 1);
}

AlgebraPtr build_ring(const RingSpec& spec, int D) {
  try {
    if (spec.backend == "semigroup") return LocalAlgebra::semigroup(NumericalSemigroup(spec.generators), spec.p, D);
    if (spec.backend == "T") return LocalAlgebra::t_ring(spec.p, D);
    std::vector<LocalAlgebra::Exponent> rels;
    for (const auto& r : spec.relations) rels.push_back(exponent_of(spec.vars, r));
    return LocalAlgebra::monomial_quotient(spec.vars, rels, spec.p, D);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  }
}

RunOutput run_scenario(const Scenario& s, const RunOptions& opt) {
  Context cx;
  cx.opt = opt;
  int D = opt.truncation.value_or(resolve_truncation(s));
  cx.a = build_ring(s.ring, D);
  cx.R = Module::regular(cx.a);
  for (const auto& [tname, path] : s.tables) {
    std::filesystem::path p = path;
    if (p.is_relative()) p = s.base_dir / p;
    try {
      auto t = load_closure_table(p.string(), cx.R);
      t.name = tname;
      cx.tables.emplace(tname, std::move(t));
    } catch (const std::exception& e) {
      throw ScenarioError(e.what());
    }
  }
  for (const auto& d : s.decls) {
    Submodule v;
    try {
      v = cx.resolve(d.expr);
    } catch (const std::exception& e) {
      throw ScenarioError(s.name + ":" + std::to_string(d.line) + ": " + e.what());
    }
    if (d.kind == "ideal" && !v.mod->is_regular())
      throw ScenarioError(s.name + ":" + std::to_string(d.line) + ": " + d.name + " is not an ideal");
    if (d.kind == "ideal") cx.ideals[d.name] = v;
    cx.named[d.name] = v;
  }

  RunOutput out;
  Report& rep = out.report;
  rep.scenario = s.name;
  rep.ring = {{"backend", s.ring.backend}, {"description", cx.a->describe()}, {"p", s.ring.p}, {"D", D},
              {"D_source", s.ring.D ? "explicit" : "auto"}, {"dim", cx.a->dim()}};
  if (opt.truncation) rep.ring["D_source"] = "override";

  std::vector<const TaskSpec*> todo;
  for (const auto& t : s.tasks)
    if (!opt.only_lattices || t.kind == "lattice") todo.push_back(&t);
  rep.tasks.resize(todo.size());
  std::mutex out_mu;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i; (i = next++) < todo.size();) rep.tasks[i] = execute(cx, *todo[i], static_cast<int>(i) + 1, out, out_mu);
  };
  int jobs = opt.jobs > 0 ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<int>(jobs, static_cast<int>(todo.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& t : rep.tasks)
    if (t.sampled) {
      rep.enumeration = "sampled: " + std::to_string(opt.sample) + " lifts per enumeration, seed " + std::to_string(opt.seed);
      break;
    }
  return out;
}

std::string compare_submodule_fields(const Report& a, const Report& b) {
  if (a.tasks.size() != b.tasks.size()) return "task counts differ";
  std::function<std::string(const ojson&, const ojson&, const std::string&)> cmp =
      [&](const ojson& x, const ojson& y, const std::string& where) -> std::string {
    bool xs = x.is_object() && x.contains("generators") && x.contains("dim");
    if (xs) {
      if (!(y.is_object() && y.contains("generators"))) return where + ": shape differs";
      return x["generators"] == y["generators"] ? "" : where + ": " + x["generators"].dump() + " vs " + y["generators"].dump();
    }
    if (x.is_array() && y.is_array()) {
      bool objects = std::any_of(x.begin(), x.end(), [](const ojson& e) { return e.is_object(); });
      if (!objects) return "";
      if (x.size() != y.size()) return where + ": list lengths differ";
      for (size_t i = 0; i < x.size(); ++i)
        if (auto w = cmp(x[i], y[i], where + "[" + std::to_string(i) + "]"); !w.empty()) return w;
      return "";
    }
    if (x.is_object() && y.is_object()) {
      for (const auto& [k, v] : x.items())
        if (y.contains(k))
          if (auto w = cmp(v, y[k], where + "." + k); !w.empty()) return w;
      return "";
    }
    return "";
  };
  for (size_t i = 0; i < a.tasks.size(); ++i) {
    const auto& x = a.tasks[i];
    const auto& y = b.tasks[i];
    std::string where = "task " + std::to_string(x.id) + " (" + x.kind + " " + x.args + ")";
    if (x.status != y.status) return where + ": status " + x.status + " vs " + y.status;
    if (auto w = cmp(x.fields, y.fields, where); !w.empty()) return w;
  }
  return "";
}

std::vector<BatteryEntry> verify_all(const std::filesystem::path& dir, bool certify, const RunOptions& opt) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".scn") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<BatteryEntry> out;
  for (const auto& f : files) {
    BatteryEntry b;
    b.scenario = f.stem().string();
    auto t0 = std::chrono::steady_clock::now();
    try {
      Scenario s = load_scenario(f);
      b.expected_exit = s.expect_exit;
      b.D = resolve_truncation(s);
      RunOptions base = opt;
      base.truncation.reset();
      Report r = run_scenario(s, base).report;
      b.exit_code = r.exit_code();
      for (const auto& t : r.tasks)
        if (t.status == "fail" || t.status == "error") {
          b.failure = "task " + std::to_string(t.id) + " (" + t.kind + " " + t.args + "): " + t.witness;
          break;
        }
      if (certify) {
        RunOptions twice = base;
        twice.truncation = 2 * b.D;
        b.certificate = compare_submodule_fields(r, run_scenario(s, twice).report);
        b.certified = true;
      }
    } catch (const std::exception& e) {
      b.exit_code = 2;
      b.failure = e.what();
    }
    b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace closurelab
