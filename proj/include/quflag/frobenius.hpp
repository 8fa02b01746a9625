#pragma once

#include "quflag/relations.hpp"
#include "quflag/weyllattice.hpp"

namespace quflag {

// Pullback through the quantum Frobenius homomorphism: a module over the
// sharp quantized algebra becomes a module over the original one, with
//   e_i^{(n)} |-> sharp e_i^{(n/r_i)} when r_i | n, else 0
// and weights embedded through sharpX into X.
template <class K>
class FrobeniusWeightModule final : public WeightModule<K> {
 public:
  ModulePtr<K> sharp_mod;
  std::vector<long> r_i;

  SparseVec<K> compute_column(OpKind k, int node, int n, int j) const override {
    long r = r_i[static_cast<size_t>(node)];
    if (n % r != 0) return {};
    return sharp_mod->column(k, node, static_cast<int>(n / r), j);
  }
};

template <class K>
ModulePtr<K> frobenius_pullback(const SharpDatum& sd, ModulePtr<K> sharp_mod) {
  if (sharp_mod->datum->label != sd.sharp->label)
    throw std::invalid_argument("frobenius_pullback: module not over sharp datum");
  auto m = std::make_shared<FrobeniusWeightModule<K>>();
  m->datum = sd.base;
  m->field = sharp_mod->field;
  m->name = "F*(" + sharp_mod->name + ")";
  m->sharp_mod = sharp_mod;
  m->r_i = sd.r_i;
  m->wt.reserve(sharp_mod->wt.size());
  for (const auto& w : sharp_mod->wt) m->wt.push_back(sd.from_sharp_coords(w));
  m->finalize_blocks();
  return m;
}

// Extremal-weight isomorphisms: for lambda in sharpX+ and every w, the wlambda
// weight spaces of Delta and nabla are one-dimensional and the canonical map
// is nonzero there.
template <class K>
CheckReport verify_extremal_iso(const SpecializedWeyl<K>& sw) {
  CheckReport rep;
  rep.label = "extremal isomorphisms for V(" + weight_str(sw.lambda) + ") at " +
              sw.field.to_string();
  const RootDatum& rd = *sw.datum;
  for (const auto& w : rd.weyl) {
    Weight ww = rd.act(w, sw.lambda);
    std::string wname = "w=[";
    for (size_t t = 0; t < w.word.size(); ++t)
      wname += (t ? "," : "") + std::to_string(w.word[t] + 1);
    wname += "]";
    size_t dd = sw.delta->block(ww).size();
    size_t dn = sw.nabla->block(ww).size();
    bool dims_ok = dd == 1 && dn == 1;
    rep.add("extremal-dim " + wname, dims_ok,
            "dim Delta_{w.lambda} = " + std::to_string(dd) +
                ", dim nabla_{w.lambda} = " + std::to_string(dn));
    if (!dims_ok) continue;
    const auto& C = sw.canonical.at(ww);
    bool nonzero = !C[0][0].is_zero();
    rep.add("extremal-canonical " + wname, nonzero,
            "canonical map vanishes on the extremal space");
  }
  return rep;
}

}  // namespace quflag
