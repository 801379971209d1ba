#pragma once

#include <string>
#include <vector>

namespace closurelab {

// Numerical semigroup given by generators with gcd 1.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<int> gens);

  const std::vector<int>& generators() const { return gens_; }
  const std::vector<int>& minimal_generators() const { return mingens_; }
  bool contains(int s) const;
  const std::vector<int>& gaps() const { return gaps_; }
  int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  int conductor() const { return frobenius() + 1; }
  int multiplicity() const { return mingens_.front(); }
  int max_generator() const { return mingens_.back(); }
  bool symmetric() const;
  std::vector<int> elements_below(int bound) const;
  // smallest element >= s
  int next_element(int s) const;
  std::string name() const;

 private:
  std::vector<int> gens_, mingens_, gaps_;
};

// Smallest safe truncation degree: largest generator degree in the scenario,
// plus the conductor (or largest relation degree), plus twice the largest
// degree used in a colon. With no declared degrees it is conductor + 1.
int exactness_window(const std::vector<int>& degrees, int conductor_or_relation, int max_mult);
// What `D auto` picks: the window rounded up to an even degree.
int auto_truncation(const std::vector<int>& degrees, int conductor_or_relation, int max_mult);

}  // namespace closurelab
