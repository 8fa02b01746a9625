#pragma once

#include "quflag/qarith.hpp"
#include "quflag/weightmodule.hpp"

namespace quflag {

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::string label;
  std::vector<CheckItem> items;
  bool pass = true;
  void add(const std::string& name, bool ok, const std::string& witness = "") {
    items.push_back({name, ok, ok ? std::string() : witness});
    pass = pass && ok;
  }
};

namespace detail {

template <class K>
SparseVec<K> scale_vec(const SparseVec<K>& v, const K& s) {
  SparseVec<K> out;
  if (s.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [r, c] : v) {
    K x = c * s;
    if (!x.is_zero()) out.emplace_back(r, std::move(x));
  }
  return out;
}

template <class K>
bool vec_eq(const SparseVec<K>& a, const SparseVec<K>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return false;
    if (!(a[i].second == b[j].second)) return false;
    ++i;
    ++j;
  }
  return i == a.size() && j == b.size();
}

}  // namespace detail

// Defining relations of the quantized enveloping algebra, as matrix
// identities on a module: weight grading, k-commutation, [e_i,f_j],
// quantum Serre in divided powers, divided-power products, integrability.
template <class K>
CheckReport check_defining_relations(const WeightModule<K>& M) {
  CheckReport rep;
  rep.label = "relations on " + M.name + " (field " + M.field.to_string() + ")";
  const RootDatum& rd = *M.datum;
  const K one = FieldOps<K>::one(M.field);

  // Weight grading of every stored power.
  {
    bool ok = true;
    std::string wit;
    for (int node = 0; node < rd.rank && ok; ++node) {
      Weight ai = rd.alpha(node);
      int bound = M.power_bound(node);
      for (int n = 1; n <= bound && ok; ++n)
        for (int j = 0; j < M.dim() && ok; ++j) {
          for (char kc : {'e', 'f'}) {
            OpKind k = kc == 'e' ? OpKind::E : OpKind::F;
            Weight tgt = M.wt[static_cast<size_t>(j)];
            for (int t = 0; t < rd.rank; ++t)
              tgt[static_cast<size_t>(t)] +=
                  (k == OpKind::E ? n : -n) * ai[static_cast<size_t>(t)];
            for (const auto& [r, c] : M.column(k, node, n, j))
              if (M.wt[static_cast<size_t>(r)] != tgt) {
                ok = false;
                wit = "op " + std::string(1, kc) + std::to_string(node + 1) +
                      "^(" + std::to_string(n) + ") breaks grading at basis " +
                      std::to_string(j);
              }
          }
        }
    }
    rep.add("weight-grading", ok, wit);
  }

  // k-commutation: k_y e_i^{(n)} k_y^{-1} = q^{n<alpha_i,y>} e_i^{(n)}.
  {
    bool ok = true;
    std::string wit;
    for (int node = 0; node < rd.rank && ok; ++node)
      for (int yi = 0; yi < rd.rank && ok; ++yi) {
        Coweight y(static_cast<size_t>(rd.rank), 0);
        y[static_cast<size_t>(yi)] = 1;
        long pa = rd.pair(rd.alpha(node), y);
        for (int n = 1; n <= std::min(2, M.power_bound(node)) && ok; ++n)
          for (int j = 0; j < M.dim() && ok; ++j) {
            for (char kc : {'e', 'f'}) {
              OpKind k = kc == 'e' ? OpKind::E : OpKind::F;
              long sgn = kc == 'e' ? 1 : -1;
              SparseVec<K> lhs = M.apply_ky(
                  y, 1, M.apply(k, node, n, M.apply_ky(y, -1, unit_vec(j, one))));
              SparseVec<K> rhs = detail::scale_vec(
                  M.apply(k, node, n, unit_vec(j, one)),
                  FieldOps<K>::q_power(M.field, sgn * n * pa));
              if (!detail::vec_eq(lhs, rhs)) {
                ok = false;
                wit = "k-commutation fails: node " + std::to_string(node + 1) +
                      " y=alpha" + std::to_string(yi + 1) + "^vee basis " +
                      std::to_string(j);
              }
            }
          }
      }
    rep.add("k-commutation", ok, wit);
  }

  // [e_i, f_j] = delta_ij [<mu, alpha_i^vee>]_{q_i}.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i)
      for (int j2 = 0; j2 < rd.rank && ok; ++j2)
        for (int v = 0; v < M.dim() && ok; ++v) {
          SparseVec<K> uv = unit_vec(v, one);
          SparseVec<K> lhs = M.apply(OpKind::E, i, 1, M.apply(OpKind::F, j2, 1, uv));
          SparseVec<K> rhs = M.apply(OpKind::F, j2, 1, M.apply(OpKind::E, i, 1, uv));
          std::map<int, K> acc;
          add_scaled(acc, lhs, one);
          add_scaled(acc, rhs, -one);
          SparseVec<K> comm = collect(std::move(acc));
          SparseVec<K> expect;
          if (i == j2) {
            long m = M.pairing(v, i);
            K s = FieldOps<K>::from_laurent(
                M.field, q_integer_d(m, rd.d[static_cast<size_t>(i)]));
            if (!s.is_zero()) expect.emplace_back(v, s);
          }
          if (!detail::vec_eq(comm, expect)) {
            ok = false;
            wit = "[e_" + std::to_string(i + 1) + ", f_" +
                  std::to_string(j2 + 1) + "] fails at basis " +
                  std::to_string(v);
          }
        }
    rep.add("ef-commutator", ok, wit);
  }

  // Quantum Serre in divided powers.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i)
      for (int j2 = 0; j2 < rd.rank && ok; ++j2) {
        if (i == j2) continue;
        int top = 1 - rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j2)];
        for (char kc : {'e', 'f'}) {
          OpKind k = kc == 'e' ? OpKind::E : OpKind::F;
          for (int v = 0; v < M.dim() && ok; ++v) {
            std::map<int, K> acc;
            for (int r = 0; r <= top; ++r) {
              SparseVec<K> t = M.apply(k, i, r, unit_vec(v, one));
              t = M.apply(k, j2, 1, t);
              t = M.apply(k, i, top - r, t);
              K s = r % 2 == 0 ? one : -one;
              add_scaled(acc, t, s);
            }
            SparseVec<K> total = collect(std::move(acc));
            if (!total.empty()) {
              ok = false;
              wit = std::string("serre-") + kc + " fails for (i,j)=(" +
                    std::to_string(i + 1) + "," + std::to_string(j2 + 1) +
                    ") basis " + std::to_string(v);
            }
          }
        }
      }
    rep.add("quantum-serre", ok, wit);
  }

  // Divided-power products: e^{(m)} e^{(n)} = binom_{q_i}(m+n, n) e^{(m+n)}.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i) {
      int bound = M.power_bound(i);
      for (int mm = 1; mm + 1 <= bound + 1 && mm <= 3 && ok; ++mm)
        for (int nn = 1; mm + nn <= bound + 1 && nn <= 3 && ok; ++nn) {
          K s = FieldOps<K>::from_laurent(
              M.field, q_binomial_d(mm + nn, nn, rd.d[static_cast<size_t>(i)]));
          for (char kc : {'e', 'f'}) {
            OpKind k = kc == 'e' ? OpKind::E : OpKind::F;
            for (int v = 0; v < M.dim() && ok; ++v) {
              SparseVec<K> lhs =
                  M.apply(k, i, mm, M.apply(k, i, nn, unit_vec(v, one)));
              SparseVec<K> rhs =
                  detail::scale_vec(M.apply(k, i, mm + nn, unit_vec(v, one)), s);
              if (!detail::vec_eq(lhs, rhs)) {
                ok = false;
                wit = "divided-power product fails: node " +
                      std::to_string(i + 1) + " (" + std::to_string(mm) + "," +
                      std::to_string(nn) + ") basis " + std::to_string(v);
              }
            }
          }
        }
    }
    rep.add("divided-power-product", ok, wit);
  }

  // Integrability: operators vanish beyond the weight-derived bound.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i) {
      int n = M.power_bound(i) + 1;
      for (int v = 0; v < M.dim() && ok; ++v)
        for (char kc : {'e', 'f'}) {
          OpKind k = kc == 'e' ? OpKind::E : OpKind::F;
          if (!M.apply(k, i, n, unit_vec(v, one)).empty()) {
            ok = false;
            wit = "nilpotency fails at node " + std::to_string(i + 1);
          }
        }
    }
    rep.add("integrability", ok, wit);
  }

  return rep;
}

// Prop. pm1 relation suite: the renormalized divided powers e(i,n), f(i,n)
// for a bipartition J satisfy (a) Cartan commutation (literal for the
// group-likes k_y; comultiplication-shifted for h(y,m)), (b) commutation for
// i != j, (c) the mixed relation with t(i,a,2a-m-n), and (d) the classical
// Serre relations. At ell = 1 additionally k_i = 1.
template <class K>
CheckReport check_pm1(const WeightModule<K>& M, const std::vector<int>& J,
                      int max_n = 3) {
  CheckReport rep;
  rep.label = "pm1 on " + M.name + " (field " + M.field.to_string() + ")";
  const RootDatum& rd = *M.datum;
  const K one = FieldOps<K>::one(M.field);
  long ell = M.field.ell;
  if (ell < 1) {
    rep.add("mode", false, "pm1 checks need a root-of-unity field");
    return rep;
  }
  auto in_J = [&J](int nd) {
    for (int j : J)
      if (j == nd) return true;
    return false;
  };
  auto ebar = [&](int i, int n, const SparseVec<K>& v) {
    return M.apply_ebar(in_J(i), i, n, v);
  };
  auto fbar = [&](int i, int n, const SparseVec<K>& v) {
    return M.apply_fbar(in_J(i), i, n, v);
  };

  // (a) group-likes: k_y ebar(i,n) = zeta^{n<alpha_i,y>} ebar(i,n) k_y.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i)
      for (int yi = 0; yi < rd.rank && ok; ++yi) {
        Coweight y(static_cast<size_t>(rd.rank), 0);
        y[static_cast<size_t>(yi)] = 1;
        long pa = rd.pair(rd.alpha(i), y);
        for (int n = 1; n <= max_n && ok; ++n)
          for (int v = 0; v < M.dim() && ok; ++v) {
            SparseVec<K> uv = unit_vec(v, one);
            SparseVec<K> lhs = M.apply_ky(y, 1, ebar(i, n, uv));
            SparseVec<K> rhs =
                detail::scale_vec(ebar(i, n, M.apply_ky(y, 1, uv)),
                                  FieldOps<K>::q_power(M.field, n * pa));
            bool eq = detail::vec_eq(lhs, rhs);
            SparseVec<K> lhf = M.apply_ky(y, 1, fbar(i, n, uv));
            SparseVec<K> rhf =
                detail::scale_vec(fbar(i, n, M.apply_ky(y, 1, uv)),
                                  FieldOps<K>::q_power(M.field, -n * pa));
            if (!eq || !detail::vec_eq(lhf, rhf)) {
              ok = false;
              wit = "cc1 (group-like) fails: i=" + std::to_string(i + 1) +
                    " y=alpha" + std::to_string(yi + 1) + "^vee n=" +
                    std::to_string(n) + " basis " + std::to_string(v);
            }
          }
      }
    rep.add("cc1-grouplike", ok, wit);
  }

  // (a') h(y,m): h(y,m) ebar(i,n) = ebar(i,n) (chi_{n alpha_i} shift of h),
  // i.e. the Vandermonde expansion sum_k binom(n<alpha_i,y>, k) h(y, m-k).
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i)
      for (int yi = 0; yi < rd.rank && ok; ++yi) {
        Coweight y(static_cast<size_t>(rd.rank), 0);
        y[static_cast<size_t>(yi)] = 1;
        long pa = rd.pair(rd.alpha(i), y);
        for (int m = 1; m <= max_n && ok; ++m)
          for (int n = 1; n <= max_n && ok; ++n)
            for (int v = 0; v < M.dim() && ok; ++v) {
              SparseVec<K> uv = unit_vec(v, one);
              for (int sgn : {+1, -1}) {
                SparseVec<K> base = sgn > 0 ? ebar(i, n, uv) : fbar(i, n, uv);
                SparseVec<K> lhs = M.apply_h(y, m, base);
                std::map<int, K> acc;
                for (int kk = 0; kk <= m; ++kk) {
                  BigInt bb = int_binomial(sgn * n * pa, kk);
                  if (bb == 0) continue;
                  SparseVec<K> t = M.apply_h(y, m - kk, uv);
                  t = sgn > 0 ? ebar(i, n, t) : fbar(i, n, t);
                  add_scaled(acc, t, FieldOps<K>::from_int(M.field, bb));
                }
                if (!detail::vec_eq(lhs, collect(std::move(acc)))) {
                  ok = false;
                  wit = "cc1 (h-shift) fails: i=" + std::to_string(i + 1) +
                        " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                        " basis " + std::to_string(v);
                }
              }
            }
      }
    rep.add("cc1-h", ok, wit);
  }

  // (b) cc2: ebar(i,n) fbar(j,m) = fbar(j,m) ebar(i,n) for i != j.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i)
      for (int j2 = 0; j2 < rd.rank && ok; ++j2) {
        if (i == j2) continue;
        for (int n = 1; n <= max_n && ok; ++n)
          for (int m = 1; m <= max_n && ok; ++m)
            for (int v = 0; v < M.dim() && ok; ++v) {
              SparseVec<K> uv = unit_vec(v, one);
              SparseVec<K> lhs = ebar(i, n, fbar(j2, m, uv));
              SparseVec<K> rhs = fbar(j2, m, ebar(i, n, uv));
              if (!detail::vec_eq(lhs, rhs)) {
                ok = false;
                wit = "cc2 fails: (i,j)=(" + std::to_string(i + 1) + "," +
                      std::to_string(j2 + 1) + ") n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + " basis " + std::to_string(v);
              }
            }
      }
    rep.add("cc2", ok, wit);
  }

  // (c) cc3: ebar(i,n) fbar(i,m) =
  //   sum_{a <= n,m} fbar(i,m-a) t(i,a,2a-m-n) ebar(i,n-a).
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i)
      for (int n = 1; n <= max_n && ok; ++n)
        for (int m = 1; m <= max_n && ok; ++m)
          for (int v = 0; v < M.dim() && ok; ++v) {
            SparseVec<K> uv = unit_vec(v, one);
            SparseVec<K> lhs = ebar(i, n, fbar(i, m, uv));
            std::map<int, K> acc;
            for (int a = 0; a <= std::min(n, m); ++a) {
              SparseVec<K> t = ebar(i, n - a, uv);
              t = M.apply_t(i, a, 2 * a - m - n, t);
              t = fbar(i, m - a, t);
              add_scaled(acc, t, one);
            }
            if (!detail::vec_eq(lhs, collect(std::move(acc)))) {
              ok = false;
              wit = "cc3 fails: i=" + std::to_string(i + 1) + " n=" +
                    std::to_string(n) + " m=" + std::to_string(m) +
                    " basis " + std::to_string(v);
            }
          }
    rep.add("cc3", ok, wit);
  }

  // (d) classical Serre relations in the images.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i)
      for (int j2 = 0; j2 < rd.rank && ok; ++j2) {
        if (i == j2) continue;
        int top = 1 - rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j2)];
        for (int sgn : {+1, -1}) {
          for (int v = 0; v < M.dim() && ok; ++v) {
            std::map<int, K> acc;
            for (int r = 0; r <= top; ++r) {
              SparseVec<K> t = unit_vec(v, one);
              t = sgn > 0 ? ebar(i, r, t) : fbar(i, r, t);
              t = sgn > 0 ? ebar(j2, 1, t) : fbar(j2, 1, t);
              t = sgn > 0 ? ebar(i, top - r, t) : fbar(i, top - r, t);
              add_scaled(acc, t, r % 2 == 0 ? one : -one);
            }
            if (!collect(std::move(acc)).empty()) {
              ok = false;
              wit = std::string("classical serre fails (") +
                    (sgn > 0 ? "e" : "f") + "): (i,j)=(" +
                    std::to_string(i + 1) + "," + std::to_string(j2 + 1) +
                    ") basis " + std::to_string(v);
            }
          }
        }
      }
    rep.add("classical-serre", ok, wit);
  }

  // At ell = 1 every k_i acts as the identity.
  if (ell == 1) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < rd.rank && ok; ++i) {
      Coweight di_av(static_cast<size_t>(rd.rank), 0);
      di_av[static_cast<size_t>(i)] = static_cast<int>(rd.d[static_cast<size_t>(i)]);
      for (int v = 0; v < M.dim() && ok; ++v) {
        SparseVec<K> uv = unit_vec(v, one);
        if (!detail::vec_eq(M.apply_ky(di_av, 1, uv), uv)) {
          ok = false;
          wit = "k_i != 1 at ell=1";
        }
      }
    }
    rep.add("ell1-k-trivial", ok, wit);
  }

  return rep;
}

}  // namespace quflag
