#pragma once

#include "quflag/weightmodule.hpp"

namespace quflag {

// zeta_alpha = +-1 mode: zeta^{2 d_i} = 1 for every node.
inline bool pm1_mode(const RootDatum& rd, long ell) {
  if (ell < 1) return false;
  for (int i = 0; i < rd.rank; ++i)
    if ((2 * rd.d[static_cast<size_t>(i)]) % ell != 0) return false;
  return true;
}

// zeta_i as an integer sign, valid in pm1 mode.
inline int zeta_sign(const RootDatum& rd, long ell, int node) {
  return rd.d[static_cast<size_t>(node)] % ell == 0 ? 1 : -1;
}

// Lusztig braid operators on an integrable module:
//   T_i v = sum_{a-b+c=<lam,alpha_i^vee>} (-1)^b zeta_i^{b-ac}
//           f^{(a)} e^{(b)} f^{(c)} v.
template <class K>
class BraidCache {
 public:
  explicit BraidCache(ModulePtr<K> m) : mod_(std::move(m)) {}

  const ModulePtr<K>& module() const { return mod_; }

  SparseVec<K> apply_Ti(int node, const SparseVec<K>& v) const {
    // Split into weight-homogeneous parts.
    std::map<Weight, SparseVec<K>> parts;
    for (const auto& [j, c] : v)
      parts[mod_->wt[static_cast<size_t>(j)]].emplace_back(j, c);
    std::map<int, K> acc;
    static const std::vector<int> kNoJ;
    for (auto& [w, part] : parts)
      ti_homogeneous(node, w, part, acc, false, kNoJ);
    return collect(std::move(acc));
  }

  // Classical braid operator via the pm1-identified divided powers e(i,n),
  // f(i,n); requires pm1 mode and a bipartition J.
  SparseVec<K> apply_Tbar_i(const std::vector<int>& J, int node,
                            const SparseVec<K>& v) const {
    if (!pm1_mode(*mod_->datum, mod_->field.ell))
      throw std::invalid_argument("Tbar requires zeta_alpha = +-1 mode");
    std::map<Weight, SparseVec<K>> parts;
    for (const auto& [j, c] : v)
      parts[mod_->wt[static_cast<size_t>(j)]].emplace_back(j, c);
    std::map<int, K> acc;
    for (auto& [w, part] : parts) ti_homogeneous(node, w, part, acc, true, J);
    return collect(std::move(acc));
  }

  SparseVec<K> apply_Tw(const std::vector<int>& word,
                        const SparseVec<K>& v) const {
    check_reduced(word);
    SparseVec<K> cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      cur = apply_Ti(*it, cur);
    return cur;
  }

  SparseVec<K> apply_Tbar_w(const std::vector<int>& J,
                            const std::vector<int>& word,
                            const SparseVec<K>& v) const {
    check_reduced(word);
    SparseVec<K> cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      cur = apply_Tbar_i(J, *it, cur);
    return cur;
  }

  const SparseMat<K>& Ti(int node) const {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = ti_.find(node);
    if (it != ti_.end()) return it->second;
    SparseMat<K> m;
    m.nrows = mod_->dim();
    for (int j = 0; j < mod_->dim(); ++j)
      m.cols.push_back(apply_Ti(node, unit_vec(j, FieldOps<K>::one(mod_->field))));
    return ti_.emplace(node, std::move(m)).first->second;
  }

  const SparseMat<K>& Tw(const std::vector<int>& word) const {
    check_reduced(word);
    std::string key;
    for (int i : word) key += static_cast<char>('a' + i);
    {
      std::lock_guard<std::mutex> lock(mtx_);
      auto it = tw_.find(key);
      if (it != tw_.end()) return it->second;
    }
    SparseMat<K> m;
    m.nrows = mod_->dim();
    for (int j = 0; j < mod_->dim(); ++j)
      m.cols.push_back(apply_Tw(word, unit_vec(j, FieldOps<K>::one(mod_->field))));
    std::lock_guard<std::mutex> lock(mtx_);
    return tw_.emplace(std::move(key), std::move(m)).first->second;
  }

 private:
  void check_reduced(const std::vector<int>& word) const {
    const RootDatum& rd = *mod_->datum;
    auto act = rd.identity().action;
    for (int i : word) {
      if (i < 0 || i >= rd.rank)
        throw std::invalid_argument("braid: bad node in word");
      // multiply on the right by s_i
      std::vector<std::vector<int>> si(
          static_cast<size_t>(rd.rank),
          std::vector<int>(static_cast<size_t>(rd.rank), 0));
      for (int a = 0; a < rd.rank; ++a) {
        si[static_cast<size_t>(a)][static_cast<size_t>(a)] = 1;
        si[static_cast<size_t>(a)][static_cast<size_t>(i)] -=
            rd.cartan[static_cast<size_t>(a)][static_cast<size_t>(i)];
      }
      std::vector<std::vector<int>> nxt(
          static_cast<size_t>(rd.rank),
          std::vector<int>(static_cast<size_t>(rd.rank), 0));
      for (int a = 0; a < rd.rank; ++a)
        for (int b = 0; b < rd.rank; ++b)
          for (int c = 0; c < rd.rank; ++c)
            nxt[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
                act[static_cast<size_t>(a)][static_cast<size_t>(c)] *
                si[static_cast<size_t>(c)][static_cast<size_t>(b)];
      act = nxt;
    }
    int idx = rd.weyl_index(act);
    if (idx < 0 || rd.weyl[static_cast<size_t>(idx)].length !=
                       static_cast<int>(word.size()))
      throw std::invalid_argument("braid: word is not reduced");
  }

  void ti_homogeneous(int node, const Weight& w, const SparseVec<K>& part,
                      std::map<int, K>& acc, bool classical,
                      const std::vector<int>& J) const {
    auto in_J = [&J](int nd) {
      for (int j : J)
        if (j == nd) return true;
      return false;
    };
    long m = w[static_cast<size_t>(node)];
    int bound = mod_->power_bound(node);
    for (int c = 0; c <= bound; ++c) {
      SparseVec<K> fc = classical
                            ? mod_->apply_fbar(in_J(node), node, c, part)
                            : mod_->apply(OpKind::F, node, c, part);
      if (fc.empty()) continue;
      for (int b = 0; b <= bound; ++b) {
        long a = m + b - c;
        if (a < 0 || a > bound) continue;
        SparseVec<K> eb = classical
                              ? mod_->apply_ebar(in_J(node), node, b, fc)
                              : mod_->apply(OpKind::E, node, b, fc);
        if (eb.empty()) continue;
        SparseVec<K> fa =
            classical
                ? mod_->apply_fbar(in_J(node), node, static_cast<int>(a), eb)
                : mod_->apply(OpKind::F, node, static_cast<int>(a), eb);
        if (fa.empty()) continue;
        K scalar = classical
                       ? FieldOps<K>::one(mod_->field)
                       : mod_->qi_power(node, b - a * static_cast<long>(c));
        if (b % 2 == 1) scalar = -scalar;
        for (auto& [r, x] : fa) {
          K val = x * scalar;
          if (val.is_zero()) continue;
          auto it = acc.find(r);
          if (it == acc.end())
            acc.emplace(r, std::move(val));
          else
            it->second += val;
        }
      }
    }
  }

  ModulePtr<K> mod_;
  mutable std::map<int, SparseMat<K>> ti_;
  mutable std::map<std::string, SparseMat<K>> tw_;
  mutable std::mutex mtx_;
};

// epsilon_{w,lambda} of the sign comparison Tbar_w = epsilon T_w, composed
// along a reduced word by the cocycle rule. Substituting the e(i,n), f(i,n)
// renormalizations into the T_i sum gives the simple-reflection values
//   zeta_i^{m(m-1)/2} (i in J),  zeta_i^{m(m+3)/2} (i not in J),
// with m = <lambda, alpha_i^vee>; the two agree since zeta_i^{2m} = 1, so
// epsilon does not depend on J (as it cannot: neither T nor Tbar does).
inline int epsilon_sign(const RootDatum& rd, long ell,
                        const std::vector<int>& word, Weight lam,
                        const std::vector<int>& J) {
  if (!pm1_mode(rd, ell))
    throw std::invalid_argument("epsilon_sign requires zeta_alpha = +-1");
  auto in_J = [&](int node) {
    for (int j : J)
      if (j == node) return true;
    return false;
  };
  int sign = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    long m = lam[static_cast<size_t>(i)];
    long expo = in_J(i) ? m * (m - 1) / 2 : m * (m + 3) / 2;
    long zexp = rd.d[static_cast<size_t>(i)] * expo;
    if ((2 * zexp) % ell != 0)
      throw std::logic_error("epsilon_sign: zeta power not +-1");
    if (zexp % ell != 0) sign = -sign;
    lam = rd.act_simple(i, lam);
  }
  return sign;
}

}  // namespace quflag
