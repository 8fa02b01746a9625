#pragma once

#include "quflag/weightmodule.hpp"

namespace quflag {

// Word data for the Delta* lattice: every kept generator is a pure right
// e-divided-power word applied to v*_lambda, recorded as a tree.
struct DeltaStarData {
  struct WordRec {
    int parent = -1;  // -1 for the empty word
    int node = 0;
    int n = 0;
  };
  std::vector<WordRec> words;
  // Per weight: one entry per Delta*-basis functional (in the same order as
  // the nabla basis), expressed as an O-combination of kept words.
  std::map<Weight, std::vector<std::vector<std::pair<int, RatFunc>>>> exprs;
};

// Base change of the canonical lattices to K: Delta_{K,zeta}(lambda) and
// nabla_{K,zeta}(lambda) with their operators rewritten in lattice bases,
// plus the canonical map Delta -> nabla (the specialized inclusion).
// place = 0 keeps the generic field Q(q).
template <class K>
struct SpecializedWeyl {
  std::shared_ptr<const RootDatum> datum;
  FieldCtx field;
  Weight lambda;
  ModulePtr<RatFunc> genericV;
  ModulePtr<K> delta;
  ModulePtr<K> nabla;
  // Per weight: rows = nabla block coords, cols = delta block vectors.
  std::map<Weight, std::vector<std::vector<K>>> canonical;
  int v_delta = 0;
  int v_nabla = 0;
  std::shared_ptr<const DeltaStarData> dstar;

  int canonical_rank() const {
    int r = 0;
    for (const auto& [w, m] : canonical)
      r += dense_rank<K>(m);
    return r;
  }
  bool canonical_invertible() const {
    long d = 0;
    for (const auto& [w, m] : canonical) d += static_cast<long>(m.size());
    return canonical_rank() == d;
  }
};

namespace detail {

struct LatticeSide {
  std::map<Weight, DvrLattice> lat;
  std::vector<DeltaStarData::WordRec> words;
};

// BFS over pure divided-power words with lattice pruning. star = functional
// side (right e-words on v*_lambda); otherwise left f-words on v_lambda.
LatticeSide generate_lattice(const WeightModule<RatFunc>& V, long place,
                             bool star);

}  // namespace detail

template <class K>
SpecializedWeyl<K> specialize_weyl(ModulePtr<RatFunc> V, const Weight& lam,
                                   long place);

extern template SpecializedWeyl<RatFunc> specialize_weyl<RatFunc>(
    ModulePtr<RatFunc>, const Weight&, long);
extern template SpecializedWeyl<CycloNum> specialize_weyl<CycloNum>(
    ModulePtr<RatFunc>, const Weight&, long);

}  // namespace quflag
