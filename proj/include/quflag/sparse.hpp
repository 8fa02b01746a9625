#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "quflag/scalar.hpp"

namespace quflag {

// Sparse vector: sorted by index, no explicit zeros.
template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

template <class K>
SparseVec<K> unit_vec(int idx, const K& one) {
  return {{idx, one}};
}

template <class K>
void add_scaled(std::map<int, K>& acc, const SparseVec<K>& v, const K& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) {
    auto it = acc.find(i);
    if (it == acc.end())
      acc.emplace(i, x * c);
    else
      it->second += x * c;
  }
}

template <class K>
SparseVec<K> collect(std::map<int, K>&& acc) {
  SparseVec<K> out;
  out.reserve(acc.size());
  for (auto& [i, x] : acc)
    if (!x.is_zero()) out.emplace_back(i, std::move(x));
  return out;
}

// Column-major sparse matrix.
template <class K>
struct SparseMat {
  int nrows = 0;
  std::vector<SparseVec<K>> cols;
  int ncols() const { return static_cast<int>(cols.size()); }
  SparseVec<K> apply(const SparseVec<K>& v) const {
    std::map<int, K> acc;
    for (const auto& [j, c] : v) add_scaled(acc, cols[static_cast<size_t>(j)], c);
    return collect(std::move(acc));
  }
  bool operator==(const SparseMat& o) const {
    return nrows == o.nrows && cols == o.cols;
  }
};

template <class K>
SparseMat<K> mat_mul(const SparseMat<K>& a, const SparseMat<K>& b) {
  SparseMat<K> r;
  r.nrows = a.nrows;
  r.cols.reserve(b.cols.size());
  for (const auto& col : b.cols) r.cols.push_back(a.apply(col));
  return r;
}

// Rank of a list of dense rows over the field K (Gaussian elimination).
template <class K>
int dense_rank(std::vector<std::vector<K>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      K f = rows[k][c] / rows[r][c];
      for (size_t c2 = c; c2 < ncols; ++c2)
        rows[k][c2] -= f * rows[r][c2];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Fraction-free rank over Q(q): clear denominators per row, then Bareiss-like
// elimination over Z[q, q^-1] with primitive row reduction to cap growth.
int laurent_rank(std::vector<std::vector<LaurentPoly>> rows);

template <>
inline int dense_rank<RatFunc>(std::vector<std::vector<RatFunc>> rows) {
  std::vector<std::vector<LaurentPoly>> lrows;
  lrows.reserve(rows.size());
  for (const auto& row : rows) {
    LaurentPoly lcm(1);
    for (const auto& x : row)
      if (!x.is_zero()) lcm = lcm.div_exact(LaurentPoly::gcd(lcm, x.den())) * x.den();
    std::vector<LaurentPoly> lr;
    lr.reserve(row.size());
    for (const auto& x : row)
      lr.push_back(x.num() * lcm.div_exact(x.is_zero() ? LaurentPoly(1) : x.den()));
    lrows.push_back(std::move(lr));
  }
  return laurent_rank(std::move(lrows));
}

// Dense linear solve A x = b over K; A given column-major as dense columns.
// Returns false if inconsistent; requires A to have full column rank when
// consistent (our uses solve against bases).
template <class K>
bool dense_solve(const std::vector<std::vector<K>>& acols,
                 std::vector<K> b, std::vector<K>* x, const K& zero) {
  size_t n = acols.size();
  size_t m = b.size();
  // Build augmented row-major matrix.
  std::vector<std::vector<K>> rows(m, std::vector<K>(n + 1, zero));
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < m; ++r) rows[r][c] = acols[c][r];
  for (size_t r = 0; r < m; ++r) rows[r][n] = b[r];
  std::vector<long> pivot_of_col(n, -1);
  size_t rr = 0;
  for (size_t c = 0; c < n && rr < m; ++c) {
    size_t p = rr;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[rr], rows[p]);
    for (size_t k = 0; k < m; ++k) {
      if (k == rr || rows[k][c].is_zero()) continue;
      K f = rows[k][c] / rows[rr][c];
      for (size_t c2 = c; c2 <= n; ++c2) rows[k][c2] -= f * rows[rr][c2];
    }
    pivot_of_col[c] = static_cast<long>(rr);
    ++rr;
  }
  std::vector<K> sol(n, zero);
  for (size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] < 0) continue;
    size_t r = static_cast<size_t>(pivot_of_col[c]);
    sol[c] = rows[r][n] / rows[r][c];
  }
  // Verify residual rows with no pivot are consistent.
  for (size_t r = rr; r < m; ++r)
    if (!rows[r][n].is_zero()) return false;
  if (x) *x = std::move(sol);
  return true;
}

// Dense matrix inverse over K (square, invertible; throws otherwise).
template <class K>
std::vector<std::vector<K>> dense_inverse(std::vector<std::vector<K>> a,
                                          const K& zero, const K& one) {
  size_t n = a.size();
  std::vector<std::vector<K>> inv(n, std::vector<K>(n, zero));
  for (size_t i = 0; i < n; ++i) inv[i][i] = one;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::invalid_argument("dense_inverse: singular matrix");
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    K d = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] / d;
      inv[c][j] = inv[c][j] / d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      K f = a[r][c];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace quflag
