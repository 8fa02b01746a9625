#pragma once

#include "quflag/braid.hpp"
#include "quflag/frobenius.hpp"
#include "quflag/weyllattice.hpp"

namespace quflag {

// Per-job cache bundle for one root datum: generic modules V(lambda),
// specialized lattices, and braid caches. Not thread-safe across jobs; each
// job owns its workspace (the modules inside are shareable).
class Workspace {
 public:
  explicit Workspace(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)) {}

  const std::shared_ptr<const RootDatum>& datum() const { return rd_; }

  ModulePtr<RatFunc> generic_V(const Weight& lam) {
    if (!rd_->dominant(lam))
      throw std::invalid_argument("generic_V: weight not dominant");
    auto it = vcache_.find(lam);
    if (it != vcache_.end()) return it->second;
    ModulePtr<RatFunc> v = build_V(lam);
    vcache_.emplace(lam, v);
    return v;
  }

  template <class K>
  std::shared_ptr<const SpecializedWeyl<K>> specialized(const Weight& lam,
                                                        long place) {
    auto& cache = spec_cache<K>();
    auto key = std::make_pair(lam, place);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sw = std::make_shared<SpecializedWeyl<K>>(
        specialize_weyl<K>(generic_V(lam), lam, place));
    cache.emplace(key, sw);
    return sw;
  }

  template <class K>
  std::shared_ptr<BraidCache<K>> braid(const ModulePtr<K>& m) {
    auto& cache = braid_cache<K>();
    const void* key = m.get();
    auto it = cache.find(key);
    if (it != cache.end())
      return std::static_pointer_cast<BraidCache<K>>(it->second);
    auto bc = std::make_shared<BraidCache<K>>(m);
    cache.emplace(key, bc);
    return bc;
  }

 private:
  ModulePtr<RatFunc> build_V(const Weight& lam) {
    bool zero = true;
    for (int x : lam) zero = zero && x == 0;
    if (zero) return trivial_module<RatFunc>(rd_, FieldCtx{});
    long total = 0;
    for (int x : lam) total += x;
    if (total == 1) {
      for (int i = 0; i < rd_->rank; ++i)
        if (lam[static_cast<size_t>(i)] == 1) return fundamental_module(rd_, i);
    }
    // Pick the fundamental factor with the smallest dimension.
    int pick = -1;
    BigInt best = 0;
    for (int i = 0; i < rd_->rank; ++i) {
      if (lam[static_cast<size_t>(i)] == 0) continue;
      Weight wi(static_cast<size_t>(rd_->rank), 0);
      wi[static_cast<size_t>(i)] = 1;
      BigInt d = rd_->weyl_dim(wi);
      if (pick < 0 || d < best) {
        pick = i;
        best = d;
      }
    }
    Weight rest = lam;
    rest[static_cast<size_t>(pick)] -= 1;
    ModulePtr<RatFunc> a = generic_V(rest);
    Weight wi(static_cast<size_t>(rd_->rank), 0);
    wi[static_cast<size_t>(pick)] = 1;
    ModulePtr<RatFunc> b = generic_V(wi);
    auto amb = tensor<RatFunc>(a, b);
    // Highest vector = v_{lam - varpi} (x) v_{varpi}: index (0, 0).
    SparseVec<RatFunc> seed = unit_vec(0, RatFunc(1));
    return hw_submodule(amb, lam, seed);
  }

  template <class K>
  std::map<std::pair<Weight, long>, std::shared_ptr<const SpecializedWeyl<K>>>&
  spec_cache() {
    if constexpr (std::is_same_v<K, RatFunc>)
      return spec_generic_;
    else
      return spec_cyclo_;
  }

  template <class K>
  std::map<const void*, std::shared_ptr<void>>& braid_cache() {
    if constexpr (std::is_same_v<K, RatFunc>)
      return braid_generic_;
    else
      return braid_cyclo_;
  }

  std::shared_ptr<const RootDatum> rd_;
  std::map<Weight, ModulePtr<RatFunc>> vcache_;
  std::map<std::pair<Weight, long>,
           std::shared_ptr<const SpecializedWeyl<RatFunc>>>
      spec_generic_;
  std::map<std::pair<Weight, long>,
           std::shared_ptr<const SpecializedWeyl<CycloNum>>>
      spec_cyclo_;
  std::map<const void*, std::shared_ptr<void>> braid_generic_;
  std::map<const void*, std::shared_ptr<void>> braid_cyclo_;
};

}  // namespace quflag
