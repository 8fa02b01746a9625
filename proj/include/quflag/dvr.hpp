#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "quflag/cyclo.hpp"
#include "quflag/ratfunc.hpp"

namespace quflag {

constexpr int kValInfinity = std::numeric_limits<int>::max();

// Scalar of Q(q) viewed in the local ring at the place (Phi_ell) of Q[q].
// ell = place index (>= 1); the residue field is Q(zeta_ell).
struct DvrScalar {
  RatFunc value;
  long ell;
};

// Exact order of vanishing of x at (Phi_ell); kValInfinity for x = 0.
int valuation(const RatFunc& x, long ell);
inline int valuation(const DvrScalar& x) { return valuation(x.value, x.ell); }

// Image in Q(zeta_ell); requires valuation >= 0.
CycloNum residue(const RatFunc& x, long ell);
inline CycloNum residue(const DvrScalar& x) { return residue(x.value, x.ell); }

// O-lattice (or plain Q(q)-subspace when ell == 0) spanned by inserted row
// vectors, kept in echelon form with pivot entries of minimal valuation per
// pivot column. Rows are never rescaled, so the first inserted vector of a
// new pivot survives verbatim unless a smaller-valuation vector replaces it.
//
// Each row tracks its expression as an O-combination of the inserted
// generators (by insertion tag).
class DvrLattice {
 public:
  DvrLattice(long ell, int ncols) : ell_(ell), ncols_(ncols) {}

  struct Row {
    std::vector<RatFunc> v;
    int pivot = -1;
    std::vector<std::pair<int, RatFunc>> expr;  // sum of tag * coeff
  };

  // Returns true iff the lattice grew. tag identifies the generator.
  bool insert(std::vector<RatFunc> v, int tag);

  // O-membership test; on success, coeffs[i] gives the coefficient of
  // rows()[i] (all with valuation >= 0 when ell > 0).
  bool member(const std::vector<RatFunc>& v,
              std::vector<RatFunc>* coeffs = nullptr) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  long ell() const { return ell_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  int val(const RatFunc& x) const;
  long ell_;
  int ncols_;
  std::vector<Row> rows_;  // sorted by pivot column
};

// Convenience wrapper matching the spec operation: an O-basis of the O-span
// of the given generators (echelonized).
std::vector<std::vector<RatFunc>> dvr_lattice_basis(
    const std::vector<std::vector<RatFunc>>& generators, long ell);

}  // namespace quflag
