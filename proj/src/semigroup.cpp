#include "closurelab/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace closurelab {

NumericalSemigroup::NumericalSemigroup(std::vector<int> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("semigroup needs generators");
  int g = 0;
  for (int x : gens_) {
    if (x <= 0) throw std::invalid_argument("semigroup generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw std::invalid_argument("semigroup generators must have gcd 1");
  std::vector<int> sorted = gens_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Frobenius number is below (min gen) * (max gen)
  int bound = sorted.front() * sorted.back() + sorted.back() + 1;
  std::vector<bool> in(bound, false);
  in[0] = true;
  for (int s = 1; s < bound; ++s)
    for (int x : sorted)
      if (x <= s && in[s - x]) {
        in[s] = true;
        break;
      }
  for (int s = 1; s < bound; ++s)
    if (!in[s]) gaps_.push_back(s);
  for (int x : sorted) {
    bool decomposable = false;
    for (int y : mingens_)
      if (x - y > 0 && in[x - y]) decomposable = true;
    if (!decomposable) mingens_.push_back(x);
  }
}

bool NumericalSemigroup::contains(int s) const {
  if (s < 0) return false;
  return !std::binary_search(gaps_.begin(), gaps_.end(), s);
}

bool NumericalSemigroup::symmetric() const {
  int f = frobenius();
  for (int s = 0; s <= f; ++s)
    if (contains(s) == contains(f - s)) return false;
  return true;
}

std::vector<int> NumericalSemigroup::elements_below(int bound) const {
  std::vector<int> out;
  for (int s = 0; s < bound; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

int NumericalSemigroup::next_element(int s) const {
  while (!contains(s)) ++s;
  return s;
}

std::string NumericalSemigroup::name() const {
  std::string s = "<";
  for (size_t i = 0; i < mingens_.size(); ++i) s += (i ? "," : "") + std::to_string(mingens_[i]);
  return s + ">";
}

int exactness_window(const std::vector<int>& degrees, int conductor_or_relation, int max_mult) {
  int c = std::max(0, conductor_or_relation);
  if (degrees.empty()) return c + 1;
  int d = *std::max_element(degrees.begin(), degrees.end());
  return std::max(c + 1, d + c + 2 * max_mult);
}

int auto_truncation(const std::vector<int>& degrees, int conductor_or_relation, int max_mult) {
  int w = exactness_window(degrees, conductor_or_relation, max_mult);
  return w + (w % 2);
}

}  // namespace closurelab
