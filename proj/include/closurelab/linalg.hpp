#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace closurelab {

using Vec = std::vector<uint8_t>;

// Prime field F_p with p < 256.
class Fp {
 public:
  explicit Fp(int p = 2);
  int p() const { return p_; }
  uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
  uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
  uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a * b) % p_); }
  uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((p_ - a) % p_); }
  uint8_t inv(uint8_t a) const;
  bool operator==(const Fp& o) const { return p_ == o.p_; }

  // v += c * w
  void axpy(Vec& v, uint8_t c, const Vec& w) const;
  void scale(Vec& v, uint8_t c) const;

 private:
  int p_;
};

bool is_zero(const Vec& v);
int leading_index(const Vec& v);  // first nonzero entry, -1 for zero

// Subspace of F_p^n kept in reduced row echelon form. The pivot of a row is
// its first nonzero entry and is normalized to 1; rows are sorted by pivot.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Fp f, int n) : f_(f), n_(n) {}

  static Subspace full(Fp f, int n);
  static Subspace span(Fp f, int n, const std::vector<Vec>& vs);

  const Fp& field() const { return f_; }
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  bool insert(Vec v);  // true if the dimension grew
  void insert_all(const std::vector<Vec>& vs) { for (const auto& v : vs) insert(v); }
  Vec reduce(Vec v) const;  // normal form: zero at every pivot column
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& o) const;

  // Coordinates of v (assumed inside) with respect to rows().
  Vec coords(const Vec& v) const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;
  size_t hash() const;

 private:
  Fp f_{2};
  int n_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
};

struct SubspaceHash {
  size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Orthogonal complement for the standard pairing.
Subspace perp(const Subspace& a);
// Solutions of C x = 0 where the rows of C are given.
Subspace kernel(Fp f, int n, const std::vector<Vec>& constraint_rows);
// Vectors of b extending a basis of a to a basis of a + b (lowest pivots first).
std::vector<Vec> complement_basis(const Subspace& a, const Subspace& b);

// Every subspace of F_p^r, as coefficient rows in RREF, smallest dimension first.
std::vector<std::vector<Vec>> all_subspaces(Fp f, int r);
// Every subspace of F_p^r of dimension exactly k.
std::vector<std::vector<Vec>> subspaces_of_dim(Fp f, int r, int k);
// Every vector of F_p^r.
void for_each_vector(Fp f, int r, const std::function<void(const Vec&)>& fn);

Vec combine(Fp f, int n, const Vec& coeffs, const std::vector<Vec>& basis);

}  // namespace closurelab
