#include "closurelab/linalg.hpp"

#include <algorithm>

namespace closurelab {

Fp::Fp(int p) : p_(p) {
  if (p < 2 || p > 251) throw std::invalid_argument("field characteristic must be a prime below 256");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
}

uint8_t Fp::inv(uint8_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  int r = 1, b = a % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<uint8_t>(r);
}

void Fp::axpy(Vec& v, uint8_t c, const Vec& w) const {
  if (c == 0) return;
  if (p_ == 2) {
    for (size_t i = 0; i < v.size(); ++i) v[i] ^= w[i];
    return;
  }
  for (size_t i = 0; i < v.size(); ++i)
    if (w[i]) v[i] = static_cast<uint8_t>((v[i] + c * w[i]) % p_);
}

void Fp::scale(Vec& v, uint8_t c) const {
  if (c == 1) return;
  for (auto& x : v) x = mul(x, c);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

int leading_index(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) return static_cast<int>(i);
  return -1;
}

Subspace Subspace::full(Fp f, int n) {
  Subspace s(f, n);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    s.rows_.push_back(std::move(e));
    s.piv_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(Fp f, int n, const std::vector<Vec>& vs) {
  Subspace s(f, n);
  s.insert_all(vs);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint8_t c = v[piv_[i]];
    if (c) f_.axpy(v, f_.neg(c), rows_[i]);
  }
  return v;
}

bool Subspace::insert(Vec v) {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length mismatch");
  v = reduce(std::move(v));
  int j = leading_index(v);
  if (j < 0) return false;
  f_.scale(v, f_.inv(v[j]));
  for (auto& r : rows_)
    if (r[j]) f_.axpy(r, f_.neg(r[j]), v);
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), j) - piv_.begin();
  piv_.insert(piv_.begin() + pos, j);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& r) { return contains(r); });
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
  return c;
}

bool Subspace::operator<(const Subspace& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
  return rows_ < o.rows_;
}

size_t Subspace::hash() const {
  size_t h = std::hash<int>()(n_) ^ (rows_.size() * 0x9e3779b97f4a7c15ULL);
  for (const auto& r : rows_)
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i]) h = (h ^ (i * 131 + r[i])) * 0x100000001b3ULL;
  return h;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace s = a.dim() >= b.dim() ? a : b;
  s.insert_all(a.dim() >= b.dim() ? b.rows() : a.rows());
  return s;
}

Subspace kernel(Fp f, int n, const std::vector<Vec>& constraint_rows) {
  Subspace c = Subspace::span(f, n, constraint_rows);
  std::vector<bool> is_piv(n, false);
  for (int j : c.pivots()) is_piv[j] = true;
  Subspace k(f, n);
  for (int j = 0; j < n; ++j) {
    if (is_piv[j]) continue;
    Vec v(n, 0);
    v[j] = 1;
    for (int i = 0; i < c.dim(); ++i) v[c.pivots()[i]] = f.neg(c.rows()[i][j]);
    k.insert(std::move(v));
  }
  return k;
}

Subspace perp(const Subspace& a) { return kernel(a.field(), a.ambient(), a.rows()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  return perp(sum(perp(a), perp(b)));
}

std::vector<Vec> complement_basis(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  std::vector<Vec> out;
  for (const auto& r : b.rows())
    if (s.insert(r)) out.push_back(r);
  return out;
}

void for_each_vector(Fp f, int r, const std::function<void(const Vec&)>& fn) {
  Vec v(r, 0);
  while (true) {
    fn(v);
    int i = 0;
    while (i < r && v[i] == f.p() - 1) v[i++] = 0;
    if (i == r) return;
    ++v[i];
  }
}

std::vector<std::vector<Vec>> subspaces_of_dim(Fp f, int r, int k) {
  std::vector<std::vector<Vec>> out;
  if (k < 0 || k > r) return out;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // free slots: row i, column j > piv[i], j not a pivot
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < r; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) slots.emplace_back(i, j);
    for_each_vector(f, static_cast<int>(slots.size()), [&](const Vec& vals) {
      std::vector<Vec> rows(k, Vec(r, 0));
      for (int i = 0; i < k; ++i) rows[i][piv[i]] = 1;
      for (size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = vals[s];
      out.push_back(std::move(rows));
    });
    int i = k - 1;
    while (i >= 0 && piv[i] == r - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<Vec>> all_subspaces(Fp f, int r) {
  std::vector<std::vector<Vec>> out;
  for (int k = 0; k <= r; ++k) {
    auto part = subspaces_of_dim(f, r, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

Vec combine(Fp f, int n, const Vec& coeffs, const std::vector<Vec>& basis) {
  Vec v(n, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) f.axpy(v, coeffs[i], basis[i]);
  return v;
}

}  // namespace closurelab
