#include "quflag/dvr.hpp"

#include <algorithm>

#include "quflag/qarith.hpp"

namespace quflag {

namespace {

// Order of vanishing of a nonzero Laurent polynomial at (Phi_ell).
int poly_valuation(const LaurentPoly& p, long ell) {
  if (p.is_zero()) return kValInfinity;
  LaurentPoly phi = cyclotomic_poly(ell);
  LaurentPoly cur = p;
  int v = 0;
  LaurentPoly quot;
  while (cur.divides(phi, &quot)) {
    cur = quot;
    ++v;
  }
  return v;
}

// Split p = Phi^v * u with u coprime to Phi; returns {v, u}.
std::pair<int, LaurentPoly> strip_phi(const LaurentPoly& p, long ell) {
  LaurentPoly phi = cyclotomic_poly(ell);
  LaurentPoly cur = p;
  int v = 0;
  LaurentPoly quot;
  while (!cur.is_zero() && cur.divides(phi, &quot)) {
    cur = quot;
    ++v;
  }
  return {v, cur};
}

}  // namespace

int valuation(const RatFunc& x, long ell) {
  if (ell < 1) throw std::invalid_argument("valuation: ell < 1");
  if (x.is_zero()) return kValInfinity;
  return poly_valuation(x.num(), ell) - poly_valuation(x.den(), ell);
}

CycloNum residue(const RatFunc& x, long ell) {
  if (ell < 1) throw std::invalid_argument("residue: ell < 1");
  if (x.is_zero()) return CycloNum::zero(ell);
  auto [vn, un] = strip_phi(x.num(), ell);
  auto [vd, ud] = strip_phi(x.den(), ell);
  int v = vn - vd;
  if (v < 0)
    throw std::invalid_argument(
        "residue: negative valuation (pole at the place)");
  if (v > 0) return CycloNum::zero(ell);
  CycloNum n = CycloNum::from_laurent(ell, un);
  CycloNum d = CycloNum::from_laurent(ell, ud);
  return n / d;
}

int DvrLattice::val(const RatFunc& x) const {
  if (x.is_zero()) return kValInfinity;
  if (ell_ == 0) return 0;  // field mode
  return valuation(x, ell_);
}

bool DvrLattice::insert(std::vector<RatFunc> v, int tag) {
  if (static_cast<int>(v.size()) != ncols_)
    throw std::invalid_argument("DvrLattice::insert: size mismatch");
  std::vector<std::pair<int, RatFunc>> expr{{tag, RatFunc(1)}};
  bool grew = false;

  auto add_expr = [](std::vector<std::pair<int, RatFunc>>& dst,
                     const std::vector<std::pair<int, RatFunc>>& src,
                     const RatFunc& c) {
    for (const auto& [t, x] : src) {
      bool found = false;
      for (auto& [t2, x2] : dst) {
        if (t2 == t) {
          x2 += x * c;
          found = true;
          break;
        }
      }
      if (!found) dst.emplace_back(t, x * c);
    }
    std::erase_if(dst, [](const auto& p) { return p.second.is_zero(); });
  };

  while (true) {
    int piv = -1;
    for (int c = 0; c < ncols_; ++c) {
      if (!v[c].is_zero()) {
        piv = c;
        break;
      }
    }
    if (piv < 0) return grew;  // reduced to zero

    // Locate the row with this pivot, keeping rows sorted by pivot.
    size_t pos = 0;
    while (pos < rows_.size() && rows_[pos].pivot < piv) ++pos;
    if (pos == rows_.size() || rows_[pos].pivot != piv) {
      Row r;
      r.v = std::move(v);
      r.pivot = piv;
      r.expr = std::move(expr);
      rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
      return true;
    }

    Row& row = rows_[pos];
    if (val(v[piv]) >= val(row.v[piv])) {
      RatFunc c = v[piv] / row.v[piv];  // in O by the valuation test
      for (int k = piv; k < ncols_; ++k) v[k] -= c * row.v[k];
      add_expr(expr, row.expr, -c);
      continue;
    }
    // New vector has strictly smaller valuation at the pivot: it becomes the
    // pivot row and the old row gets reduced and reinserted.
    std::swap(v, row.v);
    std::swap(expr, row.expr);
    grew = true;
    RatFunc c = v[piv] / row.v[piv];
    for (int k = piv; k < ncols_; ++k) v[k] -= c * row.v[k];
    add_expr(expr, row.expr, -c);
  }
}

bool DvrLattice::member(const std::vector<RatFunc>& v0,
                        std::vector<RatFunc>* coeffs) const {
  std::vector<RatFunc> v = v0;
  std::vector<RatFunc> cf(rows_.size(), RatFunc(0));
  while (true) {
    int piv = -1;
    for (int c = 0; c < ncols_; ++c) {
      if (!v[c].is_zero()) {
        piv = c;
        break;
      }
    }
    if (piv < 0) break;
    size_t pos = 0;
    while (pos < rows_.size() && rows_[pos].pivot < piv) ++pos;
    if (pos == rows_.size() || rows_[pos].pivot != piv) return false;
    const Row& row = rows_[pos];
    if (val(v[piv]) < val(row.v[piv])) return false;  // needs a unit outside O
    RatFunc c = v[piv] / row.v[piv];
    for (int k = piv; k < ncols_; ++k) v[k] -= c * row.v[k];
    cf[pos] += c;
  }
  if (coeffs) *coeffs = std::move(cf);
  return true;
}

std::vector<std::vector<RatFunc>> dvr_lattice_basis(
    const std::vector<std::vector<RatFunc>>& generators, long ell) {
  if (generators.empty()) return {};
  DvrLattice lat(ell, static_cast<int>(generators[0].size()));
  int tag = 0;
  for (const auto& g : generators) lat.insert(g, tag++);
  std::vector<std::vector<RatFunc>> out;
  out.reserve(lat.rows().size());
  for (const auto& r : lat.rows()) out.push_back(r.v);
  return out;
}

}  // namespace quflag
