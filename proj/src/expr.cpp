#include "closurelab/expr.hpp"

#include <cctype>

namespace closurelab {

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int number() {
    skip();
    size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected a number");
    int v = std::stoi(s_.substr(i_, j - i_));
    i_ = j;
    return v;
  }
  std::string ident() {
    skip();
    size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '.')) ++j;
    if (j == i_) fail("expected a name");
    std::string v = s_.substr(i_, j - i_);
    i_ = j;
    return v;
  }
  size_t pos() const { return i_; }
  void seek(size_t p) { i_ = p; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(i_ + 1) + " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

int var_index(const LocalAlgebra& a, const std::string& name) {
  for (size_t v = 0; v < a.vars().size(); ++v)
    if (a.vars()[v] == name) return static_cast<int>(v);
  return -1;
}

// term := [c '*'] factor ('*' factor)* | c
void parse_term(const LocalAlgebra& a, Lexer& lx, Vec& acc, bool negate) {
  const Fp& f = a.field();
  int coef = 1;
  LocalAlgebra::Exponent e(a.vars().size(), 0);
  bool factors = true;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    coef = lx.number() % f.p();
    factors = lx.accept('*');
  }
  while (factors) {
    std::string v = lx.ident();
    int idx = var_index(a, v);
    if (idx < 0) lx.fail("unknown variable '" + v + "'");
    int k = 1;
    if (lx.accept('^')) k = lx.number();
    e[idx] += k;
    factors = lx.accept('*');
  }
  int total = 0;
  for (int x : e) total += x;
  if (total >= a.truncation()) lx.fail("monomial beyond the truncation degree");
  int idx = a.index_of(e);
  if (idx < 0) lx.fail("monomial is not in the ring");
  uint8_t c = static_cast<uint8_t>(coef);
  if (negate) c = f.neg(c);
  acc[idx] = f.add(acc[idx], c);
}

Vec parse_sum(const LocalAlgebra& a, Lexer& lx) {
  Vec v(a.dim(), 0);
  bool neg = lx.accept('-');
  parse_term(a, lx, v, neg);
  while (true) {
    size_t save = lx.pos();
    if (lx.accept('+')) {
      parse_term(a, lx, v, false);
    } else if (lx.accept('-')) {
      parse_term(a, lx, v, true);
    } else {
      lx.seek(save);
      return v;
    }
  }
}

struct IdealParser {
  const ModulePtr& ring;
  const std::map<std::string, Submodule>& named;
  Lexer& lx;

  Submodule operand() {
    if (lx.accept('(')) {
      // either a generator list or a parenthesized ideal expression
      size_t save = lx.pos();
      try {
        std::vector<Vec> gens;
        do gens.push_back(parse_sum(*ring->algebra(), lx));
        while (lx.accept(','));
        lx.expect(')');
        return generate(ring, gens);
      } catch (const ParseError&) {
        lx.seek(save);
        Submodule s = expr();
        lx.expect(')');
        return s;
      }
    }
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      if (lx.number() != 0) lx.fail("only 0 may appear as a bare number");
      return zero(ring);
    }
    std::string name = lx.ident();
    if (auto it = named.find(name); it != named.end()) return it->second;
    if (name == "m") return maximal_ideal(ring);
    if (name == "R") return whole(ring);
    lx.fail("undeclared ideal '" + name + "'");
  }

  Submodule product() {
    Submodule s = operand();
    while (lx.accept('*')) s = ideal_times(s, operand());
    return s;
  }

  Submodule expr() {
    Submodule s = product();
    while (true) {
      if (lx.accept('+')) s = sum(s, product());
      else if (lx.accept('&')) s = intersect(s, product());
      else return s;
    }
  }
};

}  // namespace

Vec parse_element(const LocalAlgebra& a, const std::string& text) {
  Lexer lx(text);
  Vec v = parse_sum(a, lx);
  if (!lx.done()) lx.fail("trailing input");
  return v;
}

Submodule parse_ideal(const ModulePtr& ring, const std::string& text, const std::map<std::string, Submodule>& named) {
  if (!ring->is_regular()) throw std::invalid_argument("ideals live in the regular module");
  Lexer lx(text);
  IdealParser p{ring, named, lx};
  Submodule s = p.expr();
  if (!lx.done()) lx.fail("trailing input");
  return s;
}

std::string format_element(const Module& m, const Vec& v) {
  std::string out;
  for (size_t j = 0; j < v.size(); ++j) {
    if (!v[j]) continue;
    if (!out.empty()) out += " + ";
    const std::string& l = m.label(static_cast<int>(j));
    if (v[j] == 1) {
      out += l;
    } else {
      out += std::to_string(v[j]);
      if (l != "1") out += "*" + l;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> generator_strings(const Submodule& s) {
  std::vector<std::string> out;
  for (const auto& g : minimal_generators(s)) out.push_back(format_element(*s.mod, g));
  return out;
}

std::string format_submodule(const Submodule& s) {
  auto g = generator_strings(s);
  if (g.empty()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + g[i];
  return out + ")";
}

}  // namespace closurelab
