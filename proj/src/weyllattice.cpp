#include "quflag/weyllattice.hpp"

#include <deque>

namespace quflag {

namespace detail {

namespace {

// Dense coordinates of a weight-homogeneous sparse vector over its block.
std::vector<RatFunc> to_block_dense(const WeightModule<RatFunc>& V,
                                    const SparseVec<RatFunc>& v,
                                    const Weight& w) {
  const auto& blk = V.block(w);
  std::vector<RatFunc> dense(blk.size(), RatFunc(0));
  size_t p = 0;
  for (const auto& [r, c] : v) {
    while (p < blk.size() && blk[p] < r) ++p;
    if (p == blk.size() || blk[p] != r)
      throw InternalError("lattice vector not weight-homogeneous");
    dense[p] = c;
  }
  return dense;
}

}  // namespace

LatticeSide generate_lattice(const WeightModule<RatFunc>& V, long place,
                             bool star) {
  LatticeSide out;
  const RootDatum& rd = *V.datum;
  const Weight lam = V.wt[0];

  auto weight_of = [&](const SparseVec<RatFunc>& v) {
    return V.wt[static_cast<size_t>(v.front().first)];
  };

  auto ensure_lat = [&](const Weight& w) -> DvrLattice& {
    auto it = out.lat.find(w);
    if (it == out.lat.end())
      it = out.lat
               .emplace(w, DvrLattice(place,
                                      static_cast<int>(V.block(w).size())))
               .first;
    return it->second;
  };

  struct QItem {
    SparseVec<RatFunc> vec;
    int word = 0;
  };
  std::deque<QItem> queue;

  SparseVec<RatFunc> root = unit_vec(0, RatFunc(1));
  out.words.push_back({-1, 0, 0});
  ensure_lat(lam).insert(to_block_dense(V, root, lam), 0);
  queue.push_back({std::move(root), 0});

  std::vector<int> bound(static_cast<size_t>(rd.rank));
  for (int i = 0; i < rd.rank; ++i)
    bound[static_cast<size_t>(i)] = V.power_bound(i);

  while (!queue.empty()) {
    QItem cur = std::move(queue.front());
    queue.pop_front();
    Weight w = weight_of(cur.vec);
    for (int node = 0; node < rd.rank; ++node) {
      Weight ai = rd.alpha(node);
      for (int n = 1; n <= bound[static_cast<size_t>(node)]; ++n) {
        // Both sides descend: f^{(n)} lowers a vector's weight and the right
        // action of e^{(n)} lowers a functional's weight.
        Weight tgt = w;
        for (int t = 0; t < rd.rank; ++t)
          tgt[static_cast<size_t>(t)] -= n * ai[static_cast<size_t>(t)];
        if (V.block(tgt).empty()) continue;
        SparseVec<RatFunc> y =
            star ? V.apply_row(OpKind::E, node, n, cur.vec)
                 : V.apply(OpKind::F, node, n, cur.vec);
        if (y.empty()) continue;
        int wid = static_cast<int>(out.words.size());
        if (!ensure_lat(tgt).insert(to_block_dense(V, y, tgt), wid)) continue;
        out.words.push_back({cur.word, node, n});
        queue.push_back({std::move(y), wid});
      }
    }
  }
  return out;
}

}  // namespace detail

template <class K>
SpecializedWeyl<K> specialize_weyl(ModulePtr<RatFunc> V, const Weight& lam,
                                   long place) {
  const RootDatum& rd = *V->datum;
  if (V->wt.empty() || V->wt[0] != lam || V->block(lam).size() != 1)
    throw std::invalid_argument("specialize_weyl: module is not V(lambda)");
  FieldCtx fld{place};
  if constexpr (std::is_same_v<K, RatFunc>) {
    if (place != 0)
      throw std::invalid_argument("RatFunc specialization must be generic");
  } else {
    if (place < 1)
      throw std::invalid_argument("cyclotomic specialization needs a place");
  }

  auto res = [&](const RatFunc& x) -> K {
    if constexpr (std::is_same_v<K, RatFunc>)
      return x;
    else
      return residue(x, place);
  };
  auto assert_integral = [&](const RatFunc& x, const char* what) {
    if constexpr (!std::is_same_v<K, RatFunc>) {
      if (!x.is_zero() && valuation(x, place) < 0)
        throw InternalError(std::string("specialize_weyl: negative valuation in ") +
                            what + " for V(" + weight_str(lam) + ") at ell=" +
                            std::to_string(place) + " scalar " + x.to_string());
    }
  };

  detail::LatticeSide dside = detail::generate_lattice(*V, place, false);
  detail::LatticeSide sside = detail::generate_lattice(*V, place, true);

  // Freeness / rank checks per weight.
  for (const auto& [w, idxs] : V->blocks) {
    auto itd = dside.lat.find(w);
    auto its = sside.lat.find(w);
    long want = static_cast<long>(idxs.size());
    if (itd == dside.lat.end() || itd->second.rank() != want)
      throw InternalError("specialize_weyl: Delta rank short at weight " +
                          weight_str(w));
    if (its == sside.lat.end() || its->second.rank() != want)
      throw InternalError("specialize_weyl: Delta* rank short at weight " +
                          weight_str(w));
  }

  // Deterministic basis layout.
  std::vector<Weight> order;
  for (const auto& [w, idxs] : V->blocks) order.push_back(w);
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    return weight_before(rd, a, b);
  });

  SpecializedWeyl<K> sw;
  sw.datum = V->datum;
  sw.field = fld;
  sw.lambda = lam;
  sw.genericV = V;

  auto delta = std::make_shared<BaseWeightModule<K>>();
  auto nabla = std::make_shared<BaseWeightModule<K>>();
  for (auto* m : {delta.get(), nabla.get()}) {
    m->datum = V->datum;
    m->field = fld;
  }
  delta->name = "Delta(" + weight_str(lam) + ")@" + fld.to_string();
  nabla->name = "nabla(" + weight_str(lam) + ")@" + fld.to_string();

  std::map<Weight, int> block_start;
  for (const Weight& w : order) {
    block_start[w] = delta->dim();
    for (size_t r = 0; r < V->blocks.at(w).size(); ++r) {
      delta->wt.push_back(w);
      nabla->wt.push_back(w);
    }
  }
  delta->finalize_blocks();
  nabla->finalize_blocks();
  sw.v_delta = delta->block(lam)[0];
  sw.v_nabla = sw.v_delta;

  // Per-weight data: delta rows (block-dense), Delta* rows, nabla basis.
  std::map<Weight, std::vector<std::vector<RatFunc>>> delta_basis;
  std::map<Weight, std::vector<std::vector<RatFunc>>> star_rows;
  std::map<Weight, std::vector<std::vector<RatFunc>>> nabla_basis;  // cols
  for (const Weight& w : order) {
    auto& dl = dside.lat.at(w);
    std::vector<std::vector<RatFunc>> db;
    for (const auto& row : dl.rows()) db.push_back(row.v);
    delta_basis.emplace(w, std::move(db));
    auto& sl = sside.lat.at(w);
    std::vector<std::vector<RatFunc>> sr;
    for (const auto& row : sl.rows()) sr.push_back(row.v);
    // nabla basis = inverse of the Delta* row matrix.
    nabla_basis.emplace(w,
                        dense_inverse<RatFunc>(sr, RatFunc(0), RatFunc(1)));
    star_rows.emplace(w, std::move(sr));
  }

  // Canonical map: pairings of Delta* rows with Delta rows.
  for (const Weight& w : order) {
    const auto& sr = star_rows.at(w);
    const auto& db = delta_basis.at(w);
    size_t k = sr.size();
    std::vector<std::vector<K>> C(k, std::vector<K>(k, FieldOps<K>::zero(fld)));
    for (size_t r = 0; r < k; ++r)
      for (size_t j = 0; j < k; ++j) {
        RatFunc dot(0);
        for (size_t c = 0; c < sr[r].size(); ++c) dot += sr[r][c] * db[j][c];
        assert_integral(dot, "canonical pairing");
        C[r][j] = res(dot);
      }
    sw.canonical.emplace(w, std::move(C));
  }

  // Operators in the two bases.
  auto sparse_from_block = [&](const std::vector<RatFunc>& dense,
                               const Weight& w) {
    const auto& blk = V->block(w);
    SparseVec<RatFunc> v;
    for (size_t c = 0; c < dense.size(); ++c)
      if (!dense[c].is_zero()) v.emplace_back(blk[c], dense[c]);
    return v;
  };

  int maxbound = 0;
  for (int node = 0; node < rd.rank; ++node)
    maxbound = std::max(maxbound, V->power_bound(node));
  delta->stored_bound = maxbound;
  nabla->stored_bound = maxbound;

  for (char kc : {'e', 'f'}) {
    OpKind kind = kc == 'e' ? OpKind::E : OpKind::F;
    for (int node = 0; node < rd.rank; ++node) {
      Weight ai = rd.alpha(node);
      int bound = V->power_bound(node);
      for (int n = 1; n <= bound; ++n) {
        SparseMat<K> dm, nm;
        dm.nrows = delta->dim();
        nm.nrows = delta->dim();
        dm.cols.assign(static_cast<size_t>(delta->dim()), {});
        nm.cols.assign(static_cast<size_t>(delta->dim()), {});
        for (const Weight& w : order) {
          Weight tgt = w;
          for (int t = 0; t < rd.rank; ++t)
            tgt[static_cast<size_t>(t)] +=
                (kind == OpKind::E ? n : -n) * ai[static_cast<size_t>(t)];
          bool has_tgt = !V->block(tgt).empty();
          int src0 = block_start.at(w);
          const auto& db = delta_basis.at(w);
          const auto& nb = nabla_basis.at(w);
          for (size_t j = 0; j < db.size(); ++j) {
            // Delta side.
            SparseVec<RatFunc> img =
                V->apply(kind, node, n, sparse_from_block(db[j], w));
            if (!img.empty()) {
              if (!has_tgt)
                throw InternalError("specialize_weyl: image leaves module");
              std::vector<RatFunc> dense =
                  detail::to_block_dense(*V, img, tgt);
              std::vector<RatFunc> coeffs;
              if (!dside.lat.at(tgt).member(dense, &coeffs))
                throw InternalError(
                    "specialize_weyl: Delta not operator-stable at weight " +
                    weight_str(w) + " op " + kc + std::to_string(node + 1) +
                    "^(" + std::to_string(n) + ")");
              int tgt0 = block_start.at(tgt);
              auto& col = dm.cols[static_cast<size_t>(src0 + static_cast<int>(j))];
              for (size_t r = 0; r < coeffs.size(); ++r) {
                if (coeffs[r].is_zero()) continue;
                assert_integral(coeffs[r], "Delta operator");
                K val = res(coeffs[r]);
                if (!val.is_zero())
                  col.emplace_back(tgt0 + static_cast<int>(r), val);
              }
            }
            // nabla side: basis vector j = column j of nb.
            std::vector<RatFunc> nbcol(nb.size());
            for (size_t r = 0; r < nb.size(); ++r) nbcol[r] = nb[r][j];
            SparseVec<RatFunc> img2 =
                V->apply(kind, node, n, sparse_from_block(nbcol, w));
            if (!img2.empty()) {
              if (!has_tgt)
                throw InternalError("specialize_weyl: image leaves module");
              std::vector<RatFunc> dense =
                  detail::to_block_dense(*V, img2, tgt);
              const auto& srt = star_rows.at(tgt);
              int tgt0 = block_start.at(tgt);
              auto& col = nm.cols[static_cast<size_t>(src0 + static_cast<int>(j))];
              for (size_t r = 0; r < srt.size(); ++r) {
                RatFunc dot(0);
                for (size_t c = 0; c < dense.size(); ++c)
                  dot += srt[r][c] * dense[c];
                if (dot.is_zero()) continue;
                assert_integral(dot, "nabla operator");
                K val = res(dot);
                if (!val.is_zero())
                  col.emplace_back(tgt0 + static_cast<int>(r), val);
              }
            }
          }
        }
        delta->ops.emplace(std::make_tuple(kc, node, n), std::move(dm));
        nabla->ops.emplace(std::make_tuple(kc, node, n), std::move(nm));
      }
    }
  }

  // Delta* word data for multiplication maps.
  auto ds = std::make_shared<DeltaStarData>();
  ds->words = sside.words;
  for (const Weight& w : order) {
    std::vector<std::vector<std::pair<int, RatFunc>>> ex;
    for (const auto& row : sside.lat.at(w).rows()) ex.push_back(row.expr);
    ds->exprs.emplace(w, std::move(ex));
  }
  sw.dstar = std::move(ds);
  sw.delta = std::move(delta);
  sw.nabla = std::move(nabla);
  return sw;
}

template SpecializedWeyl<RatFunc> specialize_weyl<RatFunc>(ModulePtr<RatFunc>,
                                                           const Weight&,
                                                           long);
template SpecializedWeyl<CycloNum> specialize_weyl<CycloNum>(
    ModulePtr<RatFunc>, const Weight&, long);

}  // namespace quflag
