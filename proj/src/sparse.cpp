#include "quflag/sparse.hpp"

namespace quflag {

namespace {

// Divide a row by its content and common q-power; rank is scale-invariant.
void primitive_row(std::vector<LaurentPoly>& row) {
  BigInt c = 0;
  long minexp = 0;
  bool any = false;
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    c = big_gcd(c, p.content());
    minexp = any ? std::min(minexp, p.min_exp()) : p.min_exp();
    any = true;
  }
  if (!any) return;
  for (auto& p : row) {
    if (p.is_zero()) continue;
    p = p.div_scalar_exact(c).mul_monomial(-minexp);
  }
}

}  // namespace

int laurent_rank(std::vector<std::vector<LaurentPoly>> rows) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  for (auto& r : rows) primitive_row(r);
  int rank = 0;
  size_t rr = 0;
  for (size_t c = 0; c < ncols && rr < rows.size(); ++c) {
    // Pick the pivot with the fewest terms to limit growth.
    size_t best = rows.size();
    size_t best_terms = 0;
    for (size_t r = rr; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      size_t t = rows[r][c].term_count();
      if (best == rows.size() || t < best_terms) {
        best = r;
        best_terms = t;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[rr], rows[best]);
    const LaurentPoly piv = rows[rr][c];
    for (size_t r = rr + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const LaurentPoly f = rows[r][c];
      for (size_t c2 = c; c2 < ncols; ++c2)
        rows[r][c2] = rows[r][c2] * piv - rows[rr][c2] * f;
      primitive_row(rows[r]);
    }
    ++rr;
    ++rank;
  }
  return rank;
}

}  // namespace quflag
