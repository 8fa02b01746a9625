#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quflag/bigint.hpp"

namespace quflag {

// Weights live in the fundamental-weight coordinates of X (simply connected:
// Y = Q^vee, X = Hom(Q^vee, Z)); coweights in the simple-coroot coordinates
// of Y. lambda[i] = <lambda, alpha_i^vee>.
using Weight = std::vector<int>;
using Coweight = std::vector<int>;

enum class TypeLabel { A1, A1xA1, A2, B2, A3, G2 };

TypeLabel type_from_string(const std::string& s);
std::string type_to_string(TypeLabel t);
// A3/G2 are implemented but sit behind the experimental gate.
bool type_is_experimental(TypeLabel t);

struct WeylElement {
  std::vector<int> word;                 // reduced word (0-based node ids)
  std::vector<std::vector<int>> action;  // matrix on X, fw coordinates
  int length = 0;
};

struct RootDatum {
  TypeLabel type;
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // a[i][j] = <alpha_j, alpha_i^vee>
  std::vector<long> d;                   // d_i = (alpha_i, alpha_i)/2

  // Positive roots.
  std::vector<Weight> pos_roots;                // fw coordinates
  std::vector<std::vector<int>> pos_roots_sc;   // simple-root coordinates
  std::vector<Coweight> pos_coroots;            // coroot coordinates in Y
  std::vector<long> d_root;                     // d_alpha per positive root

  std::vector<WeylElement> weyl;  // full enumeration, identity first
  int longest = 0;                // index of w0
  std::vector<std::vector<int>> m;  // braid orders m_ij

  Weight rho() const { return Weight(static_cast<size_t>(rank), 1); }

  Weight alpha(int i) const;                    // simple root, fw coords
  Weight act(const WeylElement& w, const Weight& lam) const;
  Weight act_simple(int i, const Weight& lam) const;
  long pair(const Weight& lam, const Coweight& y) const;
  bool dominant(const Weight& lam) const;
  long height_in_Q(const Weight& gamma) const;  // gamma must lie in Q

  BigInt weyl_dim(const Weight& lam) const;
  // Weight multiplicities of V(lambda) by Freudenthal's recursion.
  std::map<Weight, long> weight_multiplicities(const Weight& lam) const;

  // Bilinear form on X extended from the fixed W-invariant form.
  BigRat form(const Weight& a, const Weight& b) const;

  const WeylElement& identity() const { return weyl.front(); }
  const WeylElement& w0() const { return weyl[static_cast<size_t>(longest)]; }
  // Find the enumerated element equal to this action matrix.
  int weyl_index(const std::vector<std::vector<int>>& action) const;
};

// d_scale multiplies every d_i (exposed for A1 only, to exercise the
// rescaled-form reduction; other types reject d_scale != 1).
std::shared_ptr<const RootDatum> build_root_datum(TypeLabel t,
                                                  long d_scale = 1);

// Deterministic bipartition: BFS 2-coloring from the smallest node; J is the
// color class containing node 0.
std::vector<int> bipartition_J(const RootDatum& rd);
bool valid_bipartition(const RootDatum& rd, const std::vector<int>& J);

struct SharpDatum {
  long ell = 1;
  long r = 1;
  std::vector<long> r_i;                   // per node
  std::shared_ptr<const RootDatum> base;   // original datum
  std::shared_ptr<const RootDatum> sharp;  // the sharp datum, own coords
  // sharpX = direct sum of Z * (r_i * varpi_i); checked against the
  // congruence description over all positive coroots.
  bool in_sharp_X(const Weight& lam) const;
  bool in_sharp_X_plus(const Weight& lam) const;
  Weight to_sharp_coords(const Weight& lam) const;   // lam in sharpX
  Weight from_sharp_coords(const Weight& lam) const;
};

SharpDatum sharp_datum(std::shared_ptr<const RootDatum> rd, long ell);

}  // namespace quflag
