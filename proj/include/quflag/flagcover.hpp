#pragma once

#include "quflag/workspace.hpp"

namespace quflag {

// The graded multiplication map Xi: nabla(lambda) (x) N -> nabla(lambda+mu),
// where N is nabla(mu) or a Frobenius pullback of a sharp nabla(mu). Built as
// the transpose of Xi* (v*_{lambda+mu} u |-> (v*_lambda (x) v*_mu) Delta(u))
// evaluated on the Delta* word basis, so Xi(v_lambda (x) v_mu) = v_{lambda+mu}
// exactly.
template <class K>
struct MultMap {
  Weight lambda, mu;
  ModulePtr<K> left;       // nabla(lambda)
  ModulePtr<K> right;      // nabla(mu) or pullback
  ModulePtr<K> sum;        // nabla(lambda+mu)
  ModulePtr<K> tens;       // left (x) right
  int v_left = 0, v_right = 0, v_sum = 0;
  // Per weight eta: the tensor block indices and the dense matrix
  // rows = sum-basis coords, cols = tensor block entries.
  std::map<Weight, std::pair<std::vector<int>, std::vector<std::vector<K>>>> xi;

  // Apply to an arbitrary tensor vector.
  SparseVec<K> apply(const SparseVec<K>& tvec) const {
    std::map<int, K> acc;
    std::map<Weight, std::vector<std::pair<size_t, K>>> parts;
    for (const auto& [idx, c] : tvec) {
      const Weight& w = tens->wt[static_cast<size_t>(idx)];
      auto it = xi.find(w);
      if (it == xi.end()) continue;  // weight absent from nabla(lambda+mu)
      const auto& cols = it->second.first;
      size_t pos = static_cast<size_t>(
          std::lower_bound(cols.begin(), cols.end(), idx) - cols.begin());
      parts[w].emplace_back(pos, c);
    }
    for (const auto& [w, entries] : parts) {
      const auto& mat = xi.at(w).second;
      const auto& sum_blk = sum->block(w);
      for (size_t r = 0; r < mat.size(); ++r) {
        K val = FieldOps<K>::zero(sum->field);
        for (const auto& [pos, c] : entries) val += mat[r][pos] * c;
        if (val.is_zero()) continue;
        auto it = acc.find(sum_blk[r]);
        if (it == acc.end())
          acc.emplace(sum_blk[r], std::move(val));
        else
          it->second += val;
      }
    }
    return collect(std::move(acc));
  }

  SparseVec<K> apply_pair(const SparseVec<K>& x, const SparseVec<K>& y) const {
    const auto* tm = static_cast<const TensorWeightModule<K>*>(tens.get());
    std::map<int, K> acc;
    for (const auto& [xi_, cx] : x)
      for (const auto& [yi_, cy] : y) {
        K v = cx * cy;
        if (!v.is_zero()) acc.emplace(tm->pair_index(xi_, yi_), v);
      }
    SparseVec<K> tv = collect(std::move(acc));
    return apply(tv);
  }

  // Normalization and the module-map property, as matrix identities.
  CheckReport verify() const {
    CheckReport rep;
    rep.label = "mult map (" + weight_str(lambda) + ")+(" + weight_str(mu) +
                ") at " + sum->field.to_string();
    const K one = FieldOps<K>::one(sum->field);
    // Xi(v_lambda (x) v_mu) = v_{lambda+mu}.
    {
      SparseVec<K> img = apply_pair(unit_vec(v_left, one), unit_vec(v_right, one));
      bool ok = img.size() == 1 && img[0].first == v_sum && img[0].second == one;
      rep.add("unit-normalization", ok, "Xi(v (x) v) != v");
    }
    // Intertwining with every stored divided power.
    {
      bool ok = true;
      std::string wit;
      const RootDatum& rd = *sum->datum;
      for (int node = 0; node < rd.rank && ok; ++node) {
        int bound = tens->power_bound(node);
        for (int n = 1; n <= bound && ok; ++n)
          for (char kc : {'e', 'f'}) {
            OpKind k = kc == 'e' ? OpKind::E : OpKind::F;
            for (int j = 0; j < tens->dim() && ok; ++j) {
              SparseVec<K> lhs = apply(tens->column(k, node, n, j));
              SparseVec<K> a = sum->apply(k, node, n,
                                          apply(unit_vec(j, one)));
              if (!detail::vec_eq(lhs, a)) {
                ok = false;
                wit = std::string("Xi does not intertwine ") + kc +
                      std::to_string(node + 1) + "^(" + std::to_string(n) +
                      ") at tensor index " + std::to_string(j);
              }
            }
          }
      }
      rep.add("module-map", ok, wit);
    }
    return rep;
  }
};

// Core builder: sum-side Delta* words drive the construction.
template <class K>
MultMap<K> build_mult_map_core(const SpecializedWeyl<K>& sum,
                               ModulePtr<K> left, int v_left,
                               ModulePtr<K> right, int v_right,
                               const Weight& mu_label) {
  MultMap<K> mm;
  mm.lambda = left->wt[static_cast<size_t>(v_left)];
  mm.mu = mu_label;
  mm.left = left;
  mm.right = right;
  mm.sum = sum.nabla;
  mm.tens = tensor<K>(left, right);
  mm.v_left = v_left;
  mm.v_right = v_right;
  mm.v_sum = sum.v_nabla;
  const auto* tm = static_cast<const TensorWeightModule<K>*>(mm.tens.get());
  const FieldCtx fld = sum.field;

  // Mark the words needed by the Delta* basis expressions (plus ancestors).
  const DeltaStarData& ds = *sum.dstar;
  std::vector<char> needed(ds.words.size(), 0);
  for (const auto& [w, ex] : ds.exprs)
    for (const auto& row : ex)
      for (const auto& [wid, c] : row) needed[static_cast<size_t>(wid)] = 1;
  for (size_t wid = ds.words.size(); wid-- > 0;)
    if (needed[wid] && ds.words[wid].parent >= 0)
      needed[static_cast<size_t>(ds.words[wid].parent)] = 1;

  // Row propagation down the word tree: row(u . e) = row(u) applied on the
  // right by the tensor action of e.
  std::vector<SparseVec<K>> rows(ds.words.size());
  if (!ds.words.empty() && needed[0])
    rows[0] = unit_vec(tm->pair_index(v_left, v_right),
                       FieldOps<K>::one(fld));
  for (size_t wid = 1; wid < ds.words.size(); ++wid) {
    if (!needed[wid]) continue;
    const auto& rec = ds.words[wid];
    rows[wid] = mm.tens->apply_row(OpKind::E, rec.node, rec.n,
                                   rows[static_cast<size_t>(rec.parent)]);
  }

  // Assemble per-weight dense blocks.
  for (const auto& [w, ex] : ds.exprs) {
    const auto& tblk = mm.tens->block(w);
    std::vector<std::vector<K>> mat(
        ex.size(), std::vector<K>(tblk.size(), FieldOps<K>::zero(fld)));
    for (size_t r = 0; r < ex.size(); ++r) {
      std::map<int, K> acc;
      for (const auto& [wid, coeff] : ex[r]) {
        K c;
        if constexpr (std::is_same_v<K, RatFunc>)
          c = coeff;
        else
          c = residue(coeff, fld.ell);
        add_scaled(acc, rows[static_cast<size_t>(wid)], c);
      }
      SparseVec<K> dense = collect(std::move(acc));
      size_t p = 0;
      for (const auto& [idx, c] : dense) {
        while (p < tblk.size() && tblk[p] < idx) ++p;
        if (p == tblk.size() || tblk[p] != idx)
          throw InternalError("mult map: functional escapes weight block");
        mat[r][p] = c;
      }
    }
    mm.xi.emplace(w, std::make_pair(tblk, std::move(mat)));
  }
  return mm;
}

template <class K>
MultMap<K> build_mult_map(Workspace& ws, const Weight& lambda, const Weight& mu,
                          long place) {
  auto swl = ws.specialized<K>(lambda, place);
  auto swr = ws.specialized<K>(mu, place);
  Weight sumw = lambda;
  for (size_t t = 0; t < sumw.size(); ++t) sumw[t] += mu[t];
  auto sws = ws.specialized<K>(sumw, place);
  return build_mult_map_core<K>(*sws, swl->nabla, swl->v_nabla, swr->nabla,
                                swr->v_nabla, mu);
}

// Covering data for one (lambda, mu): the dimensions of the images
// Xi(nabla(lambda) (x) T_w v_mu) and of their total span.
struct CoveringRecord {
  Weight lambda, mu;
  std::vector<long> per_w;
  long total = 0;
  long target = 0;
  bool covered = false;
};

template <class K>
CoveringRecord covering_rank(Workspace& ws, const Weight& lambda,
                             const Weight& mu, long place,
                             bool verify_map = true) {
  const RootDatum& rd = *ws.datum();
  MultMap<K> mm = build_mult_map<K>(ws, lambda, mu, place);
  if (verify_map) {
    CheckReport rep = mm.verify();
    if (!rep.pass)
      throw InternalError("covering_rank: mult map failed verification");
  }
  auto braid_r = ws.braid<K>(mm.right);
  const K one = FieldOps<K>::one(mm.sum->field);

  CoveringRecord rec;
  rec.lambda = lambda;
  rec.mu = mu;
  rec.target = mm.sum->dim();

  // Collect image vectors per weight of nabla(lambda+mu), per w.
  std::map<Weight, std::vector<std::vector<std::vector<K>>>> stacks;
  // stacks[eta][wi] = list of dense rows over the eta block.
  size_t nw = rd.weyl.size();
  for (size_t wi = 0; wi < nw; ++wi) {
    SparseVec<K> minor =
        braid_r->apply_Tw(rd.weyl[wi].word, unit_vec(mm.v_right, one));
    for (int x = 0; x < mm.left->dim(); ++x) {
      SparseVec<K> img = mm.apply_pair(unit_vec(x, one), minor);
      if (img.empty()) continue;
      const Weight& eta = mm.sum->wt[static_cast<size_t>(img.front().first)];
      const auto& blk = mm.sum->block(eta);
      std::vector<K> dense(blk.size(), FieldOps<K>::zero(mm.sum->field));
      size_t p = 0;
      for (const auto& [r, c] : img) {
        while (p < blk.size() && blk[p] < r) ++p;
        dense[p] = c;
      }
      auto& st = stacks[eta];
      if (st.empty()) st.resize(nw);
      st[wi].push_back(std::move(dense));
    }
  }
  rec.per_w.assign(nw, 0);
  for (auto& [eta, st] : stacks) {
    std::vector<std::vector<K>> all;
    for (size_t wi = 0; wi < nw; ++wi) {
      if (st[wi].empty()) continue;
      rec.per_w[wi] += dense_rank<K>(st[wi]);
      for (auto& row : st[wi]) all.push_back(row);
    }
    rec.total += dense_rank<K>(std::move(all));
  }
  rec.covered = rec.total == rec.target;
  return rec;
}

// sigma^w multiplicativity: Xi(T_w v_lambda (x) T_w v_mu) = T_w v_{lambda+mu}.
template <class K>
CheckReport check_sigma_multiplicativity(Workspace& ws, const Weight& lambda,
                                         const Weight& mu, long place) {
  const RootDatum& rd = *ws.datum();
  MultMap<K> mm = build_mult_map<K>(ws, lambda, mu, place);
  auto bl = ws.braid<K>(mm.left);
  auto br = ws.braid<K>(mm.right);
  auto bs = ws.braid<K>(mm.sum);
  const K one = FieldOps<K>::one(mm.sum->field);
  CheckReport rep;
  rep.label = "sigma multiplicativity (" + weight_str(lambda) + ")+(" +
              weight_str(mu) + ") at " + mm.sum->field.to_string();
  for (const auto& w : rd.weyl) {
    SparseVec<K> tl = bl->apply_Tw(w.word, unit_vec(mm.v_left, one));
    SparseVec<K> tr = br->apply_Tw(w.word, unit_vec(mm.v_right, one));
    SparseVec<K> ts = bs->apply_Tw(w.word, unit_vec(mm.v_sum, one));
    SparseVec<K> img = mm.apply_pair(tl, tr);
    std::string wname = "w-len" + std::to_string(w.length);
    for (int i : w.word) wname += "." + std::to_string(i + 1);
    bool nonzero = !tl.empty() && !tr.empty() && !ts.empty();
    rep.add("minor-nonzero " + wname, nonzero, "T_w v vanished");
    rep.add("sigma-mult " + wname, detail::vec_eq(img, ts),
            "Xi(T_w v (x) T_w v) != T_w v");
  }
  return rep;
}

// Lemma w-mult: T_w(sigma^1_lambda phi) = sigma^w_lambda (T_w phi) on the
// graded piece nabla(nu), i.e.
//   T_w . Xi(- (x) v_lambda) = Xi(T_w(-) (x) T_w v_lambda).
template <class K>
CheckReport check_w_mult(Workspace& ws, const Weight& nu, const Weight& lambda,
                         long place) {
  const RootDatum& rd = *ws.datum();
  MultMap<K> mm = build_mult_map<K>(ws, nu, lambda, place);
  auto bl = ws.braid<K>(mm.left);
  auto br = ws.braid<K>(mm.right);
  auto bs = ws.braid<K>(mm.sum);
  const K one = FieldOps<K>::one(mm.sum->field);
  CheckReport rep;
  rep.label = "w-mult commutation nu=(" + weight_str(nu) + ") lambda=(" +
              weight_str(lambda) + ") at " + mm.sum->field.to_string();
  for (const auto& w : rd.weyl) {
    SparseVec<K> tlam = br->apply_Tw(w.word, unit_vec(mm.v_right, one));
    bool ok = true;
    std::string wit;
    for (int x = 0; x < mm.left->dim() && ok; ++x) {
      SparseVec<K> lhs =
          bs->apply_Tw(w.word, mm.apply_pair(unit_vec(x, one),
                                             unit_vec(mm.v_right, one)));
      SparseVec<K> rhs =
          mm.apply_pair(bl->apply_Tw(w.word, unit_vec(x, one)), tlam);
      if (!detail::vec_eq(lhs, rhs)) {
        ok = false;
        wit = "witness basis vector " + std::to_string(x);
      }
    }
    std::string wname = "w-len" + std::to_string(w.length);
    for (int i : w.word) wname += "." + std::to_string(i + 1);
    rep.add("w-mult " + wname, ok, wit);
  }
  return rep;
}

// Xi associativity on a dominant triple.
template <class K>
CheckReport check_xi_associativity(Workspace& ws, const Weight& a,
                                   const Weight& b, const Weight& c,
                                   long place) {
  auto add = [](const Weight& x, const Weight& y) {
    Weight r = x;
    for (size_t t = 0; t < r.size(); ++t) r[t] += y[t];
    return r;
  };
  MultMap<K> m_ab = build_mult_map<K>(ws, a, b, place);
  MultMap<K> m_ab_c = build_mult_map<K>(ws, add(a, b), c, place);
  MultMap<K> m_bc = build_mult_map<K>(ws, b, c, place);
  MultMap<K> m_a_bc = build_mult_map<K>(ws, a, add(b, c), place);
  const K one = FieldOps<K>::one(m_ab.sum->field);
  CheckReport rep;
  rep.label = "Xi associativity (" + weight_str(a) + ")(" + weight_str(b) +
              ")(" + weight_str(c) + ") at " + m_ab.sum->field.to_string();
  bool ok = true;
  std::string wit;
  for (int x = 0; x < m_ab.left->dim() && ok; ++x)
    for (int y = 0; y < m_ab.right->dim() && ok; ++y) {
      SparseVec<K> xy = m_ab.apply_pair(unit_vec(x, one), unit_vec(y, one));
      for (int z = 0; z < m_bc.right->dim() && ok; ++z) {
        SparseVec<K> lhs = m_ab_c.apply_pair(xy, unit_vec(z, one));
        SparseVec<K> yz = m_bc.apply_pair(unit_vec(y, one), unit_vec(z, one));
        SparseVec<K> rhs = m_a_bc.apply_pair(unit_vec(x, one), yz);
        if (!detail::vec_eq(lhs, rhs)) {
          ok = false;
          wit = "triple (" + std::to_string(x) + "," + std::to_string(y) +
                "," + std::to_string(z) + ")";
        }
      }
    }
  rep.add("associativity", ok, wit);
  return rep;
}

// Prop. XY: surjectivity of nabla(lambda) (x) F*(sharp nabla(mu)) ->
// nabla(lambda+mu); mu in sharpX+ given in X coordinates.
struct SharpSurjRecord {
  Weight lambda, mu;
  long rank = 0;
  long target = 0;
  bool surjective = false;
};

template <class K>
SharpSurjRecord sharp_mult_surjectivity(Workspace& ws, Workspace& sharp_ws,
                                        const SharpDatum& sd,
                                        const Weight& lambda, const Weight& mu,
                                        long place, bool verify_map = true) {
  if (!sd.in_sharp_X_plus(mu))
    throw std::invalid_argument("sharp_mult_surjectivity: mu not in sharpX+");
  Weight mu_sharp = sd.to_sharp_coords(mu);
  auto sw_sharp = sharp_ws.specialized<K>(mu_sharp, place);
  ModulePtr<K> pullback = frobenius_pullback<K>(sd, sw_sharp->nabla);
  Weight sumw = lambda;
  for (size_t t = 0; t < sumw.size(); ++t) sumw[t] += mu[t];
  auto sws = ws.specialized<K>(sumw, place);
  auto swl = ws.specialized<K>(lambda, place);
  MultMap<K> mm = build_mult_map_core<K>(*sws, swl->nabla, swl->v_nabla,
                                         pullback, sw_sharp->v_nabla, mu);
  if (verify_map) {
    CheckReport rep = mm.verify();
    if (!rep.pass)
      throw InternalError("sharp_mult_surjectivity: mult map failed verification");
  }
  SharpSurjRecord rec;
  rec.lambda = lambda;
  rec.mu = mu;
  rec.target = mm.sum->dim();
  for (const auto& [eta, blk] : mm.xi)
    rec.rank += dense_rank<K>(blk.second);
  rec.surjective = rec.rank == rec.target;
  return rec;
}

}  // namespace quflag
