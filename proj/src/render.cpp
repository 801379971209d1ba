#include "closurelab/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace closurelab {

namespace {

int index_at(const LocalAlgebra& a, int x, int y) {
  if (a.vars().size() == 1) return y == 0 ? a.index_of({x}) : -1;
  return a.index_of({x, y});
}

std::string xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

void check_vars(const LocalAlgebra& a) {
  if (a.vars().size() > 2) throw std::invalid_argument("lattice rendering needs one or two variables");
}

}  // namespace

std::vector<LatticePoint> monomial_points(const Submodule& s, int xmax, int ymax, const std::optional<Submodule>& minus) {
  const auto& a = *s.mod->algebra();
  check_vars(a);
  if (!s.mod->is_regular()) throw std::invalid_argument("lattice rendering needs ideals");
  std::vector<LatticePoint> out;
  for (int x = 0; x <= xmax; ++x)
    for (int y = 0; y <= ymax; ++y) {
      int k = index_at(a, x, y);
      if (k < 0) continue;
      Vec v = a.basis_vector(k);
      if (s.contains(v) && !(minus && minus->contains(v))) out.emplace_back(x, y);
    }
  return out;
}

LatticePicture lattice_frame(const AlgebraPtr& a, int xmax, int ymax, std::string title) {
  check_vars(*a);
  LatticePicture p;
  p.title = std::move(title);
  p.xmax = xmax;
  p.ymax = a->vars().size() == 1 ? 0 : ymax;
  for (int x = 0; x <= p.xmax; ++x)
    for (int y = 0; y <= p.ymax; ++y)
      if (index_at(*a, x, y) >= 0) p.ring_points.emplace_back(x, y);
  return p;
}

std::string render_svg(const LatticePicture& p) {
  const int step = 40, margin = 40, legend_row = 18;
  int w = 2 * margin + p.xmax * step, h = 2 * margin + p.ymax * step;
  int legend_h = legend_row * (static_cast<int>(p.layers.size()) + 2);
  auto px = [&](int x) { return margin + x * step; };
  auto py = [&](int y) { return margin + (p.ymax - y) * step; };

  std::map<LatticePoint, std::string> fill;
  for (const auto& q : p.ring_points) fill[q] = p.base_color;
  for (const auto& l : p.layers)
    if (l.kind == LatticeLayer::Kind::Fill)
      for (const auto& q : l.points) fill[q] = l.color;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h + legend_h << "\" viewBox=\"0 0 "
     << w << ' ' << h + legend_h << "\">\n";
  os << "<title>" << xml(p.title) << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << px(0) - step / 2 << "\" y1=\"" << py(0) << "\" x2=\"" << px(p.xmax) + step / 2 << "\" y2=\""
     << py(0) << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";
  if (p.ymax > 0)
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) + step / 2 << "\" x2=\"" << px(0) << "\" y2=\""
       << py(p.ymax) - step / 2 << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";
  for (int x = 0; x <= p.xmax; ++x)
    for (int y = 0; y <= p.ymax; ++y) {
      auto it = fill.find({x, y});
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"6\" stroke=\"black\" fill=\""
         << (it == fill.end() ? "none" : it->second) << "\" data-x=\"" << x << "\" data-y=\"" << y << "\"/>\n";
    }
  for (const auto& l : p.layers) {
    if (l.kind != LatticeLayer::Kind::Ring) continue;
    os << "<g data-layer=\"" << xml(l.name) << "\" data-source=\"" << xml(l.source) << "\">\n";
    for (const auto& [x, y] : l.points)
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"11\" stroke=\"" << l.color
         << "\" stroke-width=\"2\" fill=\"none\"/>\n";
    os << "</g>\n";
  }
  int ly = h + legend_row;
  os << "<g font-family=\"monospace\" font-size=\"12\">\n";
  os << "<text x=\"" << margin << "\" y=\"" << ly << "\">" << xml(p.title) << "</text>\n";
  auto entry = [&](int row, const std::string& swatch, const std::string& text) {
    int y = ly + row * legend_row;
    os << swatch << "<text x=\"" << margin + 18 << "\" y=\"" << y + 4 << "\">" << xml(text) << "</text>\n";
  };
  std::ostringstream base;
  base << "<circle cx=\"" << margin + 6 << "\" cy=\"" << ly + legend_row << "\" r=\"6\" stroke=\"black\" fill=\""
       << p.base_color << "\"/>";
  entry(1, base.str(), "monomials of the ring");
  for (size_t i = 0; i < p.layers.size(); ++i) {
    const auto& l = p.layers[i];
    int row = static_cast<int>(i) + 2;
    std::ostringstream sw;
    if (l.kind == LatticeLayer::Kind::Fill)
      sw << "<circle cx=\"" << margin + 6 << "\" cy=\"" << ly + row * legend_row << "\" r=\"6\" stroke=\"black\" fill=\""
         << l.color << "\"/>";
    else
      sw << "<circle cx=\"" << margin + 6 << "\" cy=\"" << ly + row * legend_row << "\" r=\"8\" stroke=\"" << l.color
         << "\" stroke-width=\"2\" fill=\"none\"/>";
    entry(row, sw.str(), l.name + (l.source == "computed" ? "" : " [" + l.source + "]"));
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_ascii(const LatticePicture& p) {
  std::map<LatticePoint, char> fill;
  std::map<LatticePoint, bool> ring;
  for (const auto& q : p.ring_points) fill[q] = 'o';
  for (const auto& l : p.layers)
    for (const auto& q : l.points) {
      if (l.kind == LatticeLayer::Kind::Ring)
        ring[q] = true;
      else
        fill[q] = l.color.empty() ? '#' : static_cast<char>(std::toupper(static_cast<unsigned char>(l.color[0])));
    }
  std::ostringstream os;
  os << p.title << "\n";
  for (int y = p.ymax; y >= 0; --y) {
    os << (y < 10 ? " " : "") << y << " ";
    for (int x = 0; x <= p.xmax; ++x) {
      auto it = fill.find({x, y});
      char c = it == fill.end() ? '.' : it->second;
      bool r = ring.count({x, y}) > 0;
      os << (r ? '(' : ' ') << c << (r ? ')' : ' ');
    }
    os << "\n";
  }
  os << "   ";
  for (int x = 0; x <= p.xmax; ++x) os << ' ' << x % 10 << ' ';
  os << "\n";
  for (const auto& l : p.layers) {
    char c = l.kind == LatticeLayer::Kind::Ring ? '(' : static_cast<char>(std::toupper(static_cast<unsigned char>(l.color[0])));
    os << "  " << c << "  " << l.name << (l.source == "computed" ? "" : " [" + l.source + "]") << "\n";
  }
  return os.str();
}

}  // namespace closurelab
