#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <tuple>

#include "quflag/dvr.hpp"
#include "quflag/qarith.hpp"
#include "quflag/rootdata.hpp"
#include "quflag/sparse.hpp"

namespace quflag {

enum class OpKind : char { E = 'e', F = 'f' };

inline std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

// Finite-dimensional X-graded module with sparse divided-power operators.
// Cartan generators are never stored: k_y acts on the weight-mu space by the
// scalar q^{<mu,y>} (zeta^{<mu,y>} at a root of unity).
template <class K>
class WeightModule {
 public:
  virtual ~WeightModule() = default;

  std::shared_ptr<const RootDatum> datum;
  FieldCtx field;
  std::string name;
  std::vector<Weight> wt;
  std::map<Weight, std::vector<int>> blocks;

  int dim() const { return static_cast<int>(wt.size()); }

  const std::vector<int>& block(const Weight& w) const {
    static const std::vector<int> kEmpty;
    auto it = blocks.find(w);
    return it == blocks.end() ? kEmpty : it->second;
  }

  long pairing(int idx, int node) const {
    return wt[static_cast<size_t>(idx)][static_cast<size_t>(node)];
  }

  // Nilpotency bound: e_i^{(n)} and f_i^{(n)} vanish for n beyond this.
  int power_bound(int node) const {
    long mx = 0, mn = 0;
    bool first = true;
    for (const auto& w : wt) {
      long p = w[static_cast<size_t>(node)];
      if (first) {
        mx = mn = p;
        first = false;
      } else {
        mx = std::max(mx, p);
        mn = std::min(mn, p);
      }
    }
    return first ? 0 : static_cast<int>((mx - mn) / 2);
  }

  K qi_power(int node, long e) const {
    return FieldOps<K>::q_power(field,
                                datum->d[static_cast<size_t>(node)] * e);
  }
  K weight_q_power(const Weight& mu, const Coweight& y) const {
    return FieldOps<K>::q_power(field, datum->pair(mu, y));
  }

  // Column j of e_i^{(n)} or f_i^{(n)} (cached).
  SparseVec<K> column(OpKind k, int node, int n, int j) const {
    if (n == 0) return unit_vec(j, FieldOps<K>::one(field));
    {
      std::lock_guard<std::mutex> lock(mtx_);
      auto it = col_cache_.find({static_cast<char>(k), node, n, j});
      if (it != col_cache_.end()) return it->second;
    }
    SparseVec<K> col = compute_column(k, node, n, j);
    std::lock_guard<std::mutex> lock(mtx_);
    return col_cache_.emplace(std::make_tuple(static_cast<char>(k), node, n, j),
                              std::move(col))
        .first->second;
  }

  SparseVec<K> apply(OpKind k, int node, int n, const SparseVec<K>& v) const {
    if (n == 0) return v;
    std::map<int, K> acc;
    for (const auto& [j, c] : v) add_scaled(acc, column(k, node, n, j), c);
    return collect(std::move(acc));
  }

  // Right action on a functional: (phi . g)(x) = phi(g x).
  SparseVec<K> apply_row(OpKind k, int node, int n,
                         const SparseVec<K>& row) const {
    if (n == 0) return row;
    if (row.empty()) return {};
    // Result is supported on indices x with column(k,...,x) meeting row.
    // All row support shares... iterate candidate source blocks.
    std::map<int, K> acc;
    // Candidate columns: indices whose weight shifts into the row's weights.
    Weight shift(static_cast<size_t>(datum->rank), 0);
    Weight ai = datum->alpha(node);
    for (int t = 0; t < datum->rank; ++t)
      shift[static_cast<size_t>(t)] =
          (k == OpKind::E ? n : -n) * ai[static_cast<size_t>(t)];
    std::map<int, K> rowmap(row.begin(), row.end());
    std::map<Weight, bool> seen;
    for (const auto& [r, c] : row) {
      Weight src = wt[static_cast<size_t>(r)];
      for (int t = 0; t < datum->rank; ++t)
        src[static_cast<size_t>(t)] -= shift[static_cast<size_t>(t)];
      if (seen.count(src)) continue;
      seen.emplace(src, true);
      for (int x : block(src)) {
        K dot = FieldOps<K>::zero(field);
        for (const auto& [rr, cc] : column(k, node, n, x)) {
          auto it = rowmap.find(rr);
          if (it != rowmap.end()) dot += it->second * cc;
        }
        if (!dot.is_zero()) acc.emplace(x, dot);
      }
    }
    return collect(std::move(acc));
  }

  SparseMat<K> op_matrix(OpKind k, int node, int n) const {
    SparseMat<K> m;
    m.nrows = dim();
    m.cols.reserve(static_cast<size_t>(dim()));
    for (int j = 0; j < dim(); ++j) m.cols.push_back(column(k, node, n, j));
    return m;
  }

  // Diagonal operators.
  SparseVec<K> apply_ky(const Coweight& y, long sign,
                        const SparseVec<K>& v) const {
    SparseVec<K> out;
    out.reserve(v.size());
    for (const auto& [j, c] : v)
      out.emplace_back(
          j, c * FieldOps<K>::q_power(
                     field, sign * datum->pair(wt[static_cast<size_t>(j)], y)));
    return out;
  }
  // h(y,n): acts on weight mu by binom(<mu,y>, n).
  SparseVec<K> apply_h(const Coweight& y, long n,
                       const SparseVec<K>& v) const {
    std::map<int, K> acc;
    for (const auto& [j, c] : v) {
      BigInt b = int_binomial(datum->pair(wt[static_cast<size_t>(j)], y), n);
      K s = FieldOps<K>::from_int(field, b);
      if (!s.is_zero()) acc.emplace(j, c * s);
    }
    return collect(std::move(acc));
  }
  // t(i,n,s): acts on weight mu by binom(<mu,alpha_i^vee> + s, n).
  SparseVec<K> apply_t(int node, long n, long s, const SparseVec<K>& v) const {
    std::map<int, K> acc;
    for (const auto& [j, c] : v) {
      BigInt b = int_binomial(
          wt[static_cast<size_t>(j)][static_cast<size_t>(node)] + s, n);
      K sc = FieldOps<K>::from_int(field, b);
      if (!sc.is_zero()) acc.emplace(j, c * sc);
    }
    return collect(std::move(acc));
  }

  // e(i,n) and f(i,n): the zeta_alpha = +-1 renormalized divided powers.
  SparseVec<K> apply_ebar(bool node_in_J, int node, int n,
                          const SparseVec<K>& v) const {
    if (n == 0) return v;
    if (node_in_J) {
      K s = qi_power(node, static_cast<long>(n) * (n - 1) / 2);
      SparseVec<K> out = apply(OpKind::E, node, n, v);
      for (auto& [j, c] : out) c *= s;
      return out;
    }
    K s = qi_power(node, static_cast<long>(n) * (n + 1) / 2);
    // e_i^{(n)} k_i^n, k first.
    SparseVec<K> kv;
    kv.reserve(v.size());
    for (const auto& [j, c] : v)
      kv.emplace_back(j, c * qi_power(node, static_cast<long>(n) *
                                                pairing(j, node)));
    SparseVec<K> out = apply(OpKind::E, node, n, kv);
    for (auto& [j, c] : out) c *= s;
    return out;
  }
  SparseVec<K> apply_fbar(bool node_in_J, int node, int n,
                          const SparseVec<K>& v) const {
    if (n == 0) return v;
    if (node_in_J) {
      K s = qi_power(node, static_cast<long>(n) * (n + 1) / 2);
      SparseVec<K> kv;
      kv.reserve(v.size());
      for (const auto& [j, c] : v)
        kv.emplace_back(j, c * qi_power(node, static_cast<long>(n) *
                                                  pairing(j, node)));
      SparseVec<K> out = apply(OpKind::F, node, n, kv);
      for (auto& [j, c] : out) c *= s;
      return out;
    }
    K s = qi_power(node, static_cast<long>(n) * (n - 1) / 2);
    SparseVec<K> out = apply(OpKind::F, node, n, v);
    for (auto& [j, c] : out) c *= s;
    return out;
  }

  // Stable text serialization (basis weights + sparse operator triples).
  std::string dump() const {
    std::ostringstream os;
    os << "module " << name << "\n";
    os << "datum " << datum->label << " field " << field.to_string() << "\n";
    os << "dim " << dim() << "\n";
    for (int j = 0; j < dim(); ++j)
      os << "basis " << j << " weight " << weight_str(wt[static_cast<size_t>(j)])
         << "\n";
    for (char kc : {'e', 'f'}) {
      OpKind k = kc == 'e' ? OpKind::E : OpKind::F;
      for (int node = 0; node < datum->rank; ++node) {
        int bound = power_bound(node);
        for (int n = 1; n <= bound; ++n) {
          for (int j = 0; j < dim(); ++j) {
            for (const auto& [r, c] : column(k, node, n, j))
              os << "op " << kc << " i=" << node + 1 << " n=" << n << " "
                 << j << " -> " << r << " " << FieldOps<K>::str(c) << "\n";
          }
        }
      }
    }
    return os.str();
  }

  void finalize_blocks() {
    blocks.clear();
    for (int j = 0; j < dim(); ++j) blocks[wt[static_cast<size_t>(j)]].push_back(j);
  }

 protected:
  virtual SparseVec<K> compute_column(OpKind k, int node, int n,
                                      int j) const = 0;

 private:
  mutable std::map<std::tuple<char, int, int, int>, SparseVec<K>> col_cache_;
  mutable std::mutex mtx_;
};

template <class K>
using ModulePtr = std::shared_ptr<const WeightModule<K>>;

// ---------------------------------------------------------------------------
// Base module: explicitly stored operator matrices up to a per-node bound.
// Over Q(q) higher divided powers fall back to e^n/[n]!; over a cyclotomic
// field anything beyond the stored bound is genuinely zero (weights run out).
template <class K>
class BaseWeightModule final : public WeightModule<K> {
 public:
  using Key = std::tuple<char, int, int>;
  std::map<Key, SparseMat<K>> ops;
  int stored_bound = 1;

  SparseVec<K> compute_column(OpKind k, int node, int n, int j) const override {
    auto it = ops.find({static_cast<char>(k), node, n});
    if (it != ops.end()) return it->second.cols[static_cast<size_t>(j)];
    if (n <= stored_bound || n == 1) return {};  // absent means zero
    if constexpr (std::is_same_v<K, RatFunc>) {
      // Generic q: divided power = n-th power over [n]_{q_i}!.
      SparseVec<K> v = unit_vec(j, FieldOps<K>::one(this->field));
      for (int s = 0; s < n; ++s) {
        v = this->apply(k, node, 1, v);
        if (v.empty()) return {};
      }
      RatFunc fact(q_factorial_d(n, this->datum->d[static_cast<size_t>(node)]));
      RatFunc inv = fact.inverse();
      for (auto& [r, c] : v) c *= inv;
      return v;
    } else {
      // Beyond the stored bound the weight space is empty.
      return {};
    }
  }
};

// Tensor product via the comultiplication; divided powers act by
//   e^{(n)} -> sum_{a+b=n} q_i^{ab} e^{(a)} k_i^b (x) e^{(b)},
//   f^{(n)} -> sum_{a+b=n} q_i^{ab} f^{(a)} (x) f^{(b)} k_i^{-a}.
template <class K>
class TensorWeightModule final : public WeightModule<K> {
 public:
  ModulePtr<K> left, right;
  int pair_index(int x, int y) const { return x * right->dim() + y; }
  std::pair<int, int> unpair(int idx) const {
    return {idx / right->dim(), idx % right->dim()};
  }

  SparseVec<K> compute_column(OpKind k, int node, int n, int j) const override {
    auto [x, y] = unpair(j);
    std::map<int, K> acc;
    for (int a = 0; a <= n; ++a) {
      int b = n - a;
      K scalar = this->qi_power(node, static_cast<long>(a) * b);
      if (k == OpKind::E) {
        // e^{(a)} k_i^b acting on x: k first (scalar on wt(x)).
        scalar *= this->qi_power(
            node, static_cast<long>(b) * left->pairing(x, node));
      } else {
        // f^{(b)} k_i^{-a} acting on y.
        scalar *= this->qi_power(
            node, -static_cast<long>(a) * right->pairing(y, node));
      }
      SparseVec<K> cl = left->column(k, node, a, x);
      if (cl.empty()) continue;
      SparseVec<K> cr = right->column(k, node, b, y);
      if (cr.empty()) continue;
      for (const auto& [rx, cx] : cl)
        for (const auto& [ry, cy] : cr) {
          K val = scalar * cx * cy;
          if (val.is_zero()) continue;
          int idx = pair_index(rx, ry);
          auto it = acc.find(idx);
          if (it == acc.end())
            acc.emplace(idx, val);
          else
            it->second += val;
        }
    }
    return collect(std::move(acc));
  }
};

template <class K>
ModulePtr<K> tensor(ModulePtr<K> a, ModulePtr<K> b) {
  if (a->datum->label != b->datum->label || !(a->field == b->field))
    throw std::invalid_argument("tensor: datum or field mismatch");
  auto m = std::make_shared<TensorWeightModule<K>>();
  m->datum = a->datum;
  m->field = a->field;
  m->name = "(" + a->name + ")(x)(" + b->name + ")";
  m->left = a;
  m->right = b;
  m->wt.reserve(static_cast<size_t>(a->dim()) * static_cast<size_t>(b->dim()));
  for (int x = 0; x < a->dim(); ++x)
    for (int y = 0; y < b->dim(); ++y) {
      Weight w = a->wt[static_cast<size_t>(x)];
      for (int t = 0; t < m->datum->rank; ++t)
        w[static_cast<size_t>(t)] +=
            b->wt[static_cast<size_t>(y)][static_cast<size_t>(t)];
      m->wt.push_back(std::move(w));
    }
  m->finalize_blocks();
  return m;
}

// Submodule of an ambient module spanned (per weight) by echelonized rows;
// operators are computed by applying the ambient operator and re-solving.
class SubWeightModule final : public WeightModule<RatFunc> {
 public:
  ModulePtr<RatFunc> ambient;
  // Per weight: echelon over Q(q) whose rows are the basis vectors, in dense
  // coordinates over the ambient weight block.
  struct Block {
    std::vector<int> ambient_block;  // ambient indices spanning this weight
    DvrLattice lat{0, 0};
    std::vector<int> module_index;   // row -> basis index of this module
  };
  std::map<Weight, Block> sub;
  std::vector<SparseVec<RatFunc>> basis;  // ambient coords per basis index

  SparseVec<RatFunc> compute_column(OpKind k, int node, int n,
                                    int j) const override {
    SparseVec<RatFunc> img =
        ambient->apply(k, node, n, basis[static_cast<size_t>(j)]);
    if (img.empty()) return {};
    Weight tgt = wt[static_cast<size_t>(j)];
    Weight ai = datum->alpha(node);
    for (int t = 0; t < datum->rank; ++t)
      tgt[static_cast<size_t>(t)] +=
          (k == OpKind::E ? n : -n) * ai[static_cast<size_t>(t)];
    auto it = sub.find(tgt);
    if (it == sub.end())
      throw InternalError("submodule not closed under operator");
    const Block& blk = it->second;
    std::vector<RatFunc> dense(blk.ambient_block.size(), RatFunc(0));
    {
      size_t p = 0;
      for (const auto& [r, c] : img) {
        while (p < blk.ambient_block.size() && blk.ambient_block[p] < r) ++p;
        if (p == blk.ambient_block.size() || blk.ambient_block[p] != r)
          throw InternalError("submodule image outside weight block");
        dense[p] = c;
      }
    }
    std::vector<RatFunc> coeffs;
    if (!blk.lat.member(dense, &coeffs))
      throw InternalError("submodule image not in span");
    SparseVec<RatFunc> out;
    for (size_t r = 0; r < coeffs.size(); ++r)
      if (!coeffs[r].is_zero())
        out.emplace_back(blk.module_index[r], coeffs[r]);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
};

// Weight ordering key: strictly decreases along every -alpha_i step.
inline long weight_order_key(const RootDatum& rd, const Weight& w) {
  long k = 0;
  for (const auto& cv : rd.pos_coroots) k += rd.pair(w, cv);
  return k;
}

inline bool weight_before(const RootDatum& rd, const Weight& a,
                          const Weight& b) {
  long ka = weight_order_key(rd, a), kb = weight_order_key(rd, b);
  if (ka != kb) return ka > kb;
  return a > b;
}

// Basic modules (per-type tables), the trivial module, fundamental modules
// and highest-weight submodules.
template <class K>
ModulePtr<K> trivial_module(std::shared_ptr<const RootDatum> rd,
                            FieldCtx field) {
  auto m = std::make_shared<BaseWeightModule<K>>();
  m->datum = rd;
  m->field = field;
  m->name = "V(0)";
  m->wt.push_back(Weight(static_cast<size_t>(rd->rank), 0));
  m->stored_bound = 0;
  m->finalize_blocks();
  return m;
}

namespace detail {

struct BasicArrow {
  char kind;  // 'e' or 'f'
  int node;
  int n;
  int from, to;
  LaurentPoly coeff;
};

struct BasicSpec {
  int hw_node;
  std::vector<Weight> weights;
  std::vector<BasicArrow> arrows;
};

// The distinguished small faithful module per Cartan pattern. For rank-2
// patterns node s is the one with minimal d (the 4-dim module for B2/C2,
// the 7-dim one for G2).
BasicSpec basic_module_spec(const RootDatum& rd);

}  // namespace detail

template <class K>
ModulePtr<K> basic_module(std::shared_ptr<const RootDatum> rd,
                          FieldCtx field) {
  detail::BasicSpec spec = detail::basic_module_spec(*rd);
  auto m = std::make_shared<BaseWeightModule<K>>();
  m->datum = rd;
  m->field = field;
  Weight hw(static_cast<size_t>(rd->rank), 0);
  hw[static_cast<size_t>(spec.hw_node)] = 1;
  m->name = "V(" + weight_str(hw) + ")";
  m->wt = spec.weights;
  int dim = m->dim();
  int maxn = 1;
  for (const auto& a : spec.arrows) maxn = std::max(maxn, a.n);
  m->stored_bound = maxn;
  for (char kc : {'e', 'f'})
    for (int node = 0; node < rd->rank; ++node)
      for (int n = 1; n <= maxn; ++n) {
        SparseMat<K> mat;
        mat.nrows = dim;
        mat.cols.assign(static_cast<size_t>(dim), {});
        m->ops.emplace(std::make_tuple(kc, node, n), std::move(mat));
      }
  for (const auto& a : spec.arrows) {
    auto& mat = m->ops.at(std::make_tuple(a.kind, a.node, a.n));
    mat.cols[static_cast<size_t>(a.from)].emplace_back(
        a.to, FieldOps<K>::from_laurent(field, a.coeff));
  }
  m->finalize_blocks();
  return m;
}

// Highest-weight submodule over Q(q): the span of the U-orbit of a highest
// vector of weight lam (found by solving for the e-kernel when no seed is
// given). Generic q makes closure under the f_i alone sufficient.
ModulePtr<RatFunc> hw_submodule(ModulePtr<RatFunc> ambient, const Weight& lam,
                                std::optional<SparseVec<RatFunc>> seed =
                                    std::nullopt);

// V(varpi_node) at generic q: a hand-coded chain where one exists, otherwise
// extracted from a tensor square of the basic module.
ModulePtr<RatFunc> fundamental_module(std::shared_ptr<const RootDatum> rd,
                                      int node);

}  // namespace quflag
