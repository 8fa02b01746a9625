#include "quflag/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quflag {

TypeLabel type_from_string(const std::string& s) {
  if (s == "A1") return TypeLabel::A1;
  if (s == "A1xA1") return TypeLabel::A1xA1;
  if (s == "A2") return TypeLabel::A2;
  if (s == "B2") return TypeLabel::B2;
  if (s == "A3") return TypeLabel::A3;
  if (s == "G2") return TypeLabel::G2;
  throw std::invalid_argument("unsupported type label: " + s);
}

std::string type_to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::A1: return "A1";
    case TypeLabel::A1xA1: return "A1xA1";
    case TypeLabel::A2: return "A2";
    case TypeLabel::B2: return "B2";
    case TypeLabel::A3: return "A3";
    case TypeLabel::G2: return "G2";
  }
  throw std::logic_error("bad type");
}

bool type_is_experimental(TypeLabel t) {
  return t == TypeLabel::A3 || t == TypeLabel::G2;
}

Weight RootDatum::alpha(int i) const {
  Weight a(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) a[static_cast<size_t>(k)] = cartan[k][i];
  return a;
}

Weight RootDatum::act_simple(int i, const Weight& lam) const {
  Weight r = lam;
  int li = lam[static_cast<size_t>(i)];
  if (li == 0) return r;
  Weight ai = alpha(i);
  for (int k = 0; k < rank; ++k)
    r[static_cast<size_t>(k)] -= li * ai[static_cast<size_t>(k)];
  return r;
}

Weight RootDatum::act(const WeylElement& w, const Weight& lam) const {
  Weight r(static_cast<size_t>(rank), 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      r[static_cast<size_t>(i)] +=
          w.action[static_cast<size_t>(i)][static_cast<size_t>(j)] *
          lam[static_cast<size_t>(j)];
  return r;
}

long RootDatum::pair(const Weight& lam, const Coweight& y) const {
  long s = 0;
  for (int i = 0; i < rank; ++i)
    s += static_cast<long>(lam[static_cast<size_t>(i)]) *
         y[static_cast<size_t>(i)];
  return s;
}

bool RootDatum::dominant(const Weight& lam) const {
  return std::all_of(lam.begin(), lam.end(), [](int x) { return x >= 0; });
}

long RootDatum::height_in_Q(const Weight& gamma) const {
  // Solve gamma = sum c_i alpha_i over Z by Cramer on the Cartan matrix.
  // (fw coords of alpha_j form column j of the Cartan matrix.)
  int n = rank;
  std::vector<std::vector<BigRat>> mat(static_cast<size_t>(n),
                                       std::vector<BigRat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mat[i][j] = BigRat(cartan[i][j]);
    mat[i][static_cast<size_t>(n)] = BigRat(gamma[static_cast<size_t>(i)]);
  }
  // Gaussian elimination over Q.
  for (int col = 0, row = 0; col < n && row < n; ++col, ++row) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (mat[r][col] != 0) { p = r; break; }
    if (p < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(mat[static_cast<size_t>(row)], mat[static_cast<size_t>(p)]);
    for (int r = 0; r < n; ++r) {
      if (r == row || mat[r][col] == 0) continue;
      BigRat f = mat[r][col] / mat[static_cast<size_t>(row)][col];
      for (int c = col; c <= n; ++c) {
        mat[r][c] -= f * mat[static_cast<size_t>(row)][c];
        mat[r][c].canonicalize();
      }
    }
  }
  BigRat h = 0;
  for (int i = 0; i < n; ++i) {
    BigRat ci = mat[i][static_cast<size_t>(n)] / mat[i][i];
    ci.canonicalize();
    if (ci.get_den() != 1)
      throw std::invalid_argument("height_in_Q: weight not in root lattice");
    h += ci;
  }
  h.canonicalize();
  return static_cast<long>(h.get_num().get_si());
}

BigInt RootDatum::weyl_dim(const Weight& lam) const {
  Weight r = rho();
  BigInt num = 1, den = 1;
  for (size_t k = 0; k < pos_coroots.size(); ++k) {
    Weight lr = lam;
    for (int i = 0; i < rank; ++i) lr[static_cast<size_t>(i)] += 1;
    num *= BigInt(pair(lr, pos_coroots[k]));
    den *= BigInt(pair(r, pos_coroots[k]));
  }
  BigInt q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  if (rem != 0) throw std::logic_error("weyl_dim: non-integer result");
  return q;
}

BigRat RootDatum::form(const Weight& a, const Weight& b) const {
  // (a, b) = sum_{ij} ca_i cb_j d_i a_ij, where c are simple-root coords.
  int n = rank;
  auto solve = [&](const Weight& w) {
    std::vector<std::vector<BigRat>> mat(static_cast<size_t>(n),
                                         std::vector<BigRat>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) mat[i][j] = BigRat(cartan[i][j]);
      mat[i][static_cast<size_t>(n)] = BigRat(w[static_cast<size_t>(i)]);
    }
    for (int col = 0; col < n; ++col) {
      int p = -1;
      for (int r = col; r < n; ++r)
        if (mat[r][col] != 0) { p = r; break; }
      std::swap(mat[static_cast<size_t>(col)], mat[static_cast<size_t>(p)]);
      for (int r = 0; r < n; ++r) {
        if (r == col || mat[r][col] == 0) continue;
        BigRat f = mat[r][col] / mat[static_cast<size_t>(col)][col];
        for (int c = col; c <= n; ++c) {
          mat[r][c] -= f * mat[static_cast<size_t>(col)][c];
          mat[r][c].canonicalize();
        }
      }
    }
    std::vector<BigRat> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      out[static_cast<size_t>(i)] =
          mat[i][static_cast<size_t>(n)] / mat[i][i];
      out[static_cast<size_t>(i)].canonicalize();
    }
    return out;
  };
  auto ca = solve(a), cb = solve(b);
  BigRat s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s += ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)] *
           BigRat(d[static_cast<size_t>(i)]) * BigRat(cartan[i][j]);
      s.canonicalize();
    }
  return s;
}

int RootDatum::weyl_index(const std::vector<std::vector<int>>& action) const {
  for (size_t k = 0; k < weyl.size(); ++k)
    if (weyl[k].action == action) return static_cast<int>(k);
  return -1;
}

namespace {

std::vector<std::vector<int>> identity_matrix(int n) {
  std::vector<std::vector<int>> m(static_cast<size_t>(n),
                                  std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> r(static_cast<size_t>(n),
                                  std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            aik * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  return r;
}

// Simple reflection matrix on X in fw coordinates.
std::vector<std::vector<int>> simple_reflection_fw(
    const std::vector<std::vector<int>>& cartan, int i) {
  int n = static_cast<int>(cartan.size());
  auto m = identity_matrix(n);
  for (int k = 0; k < n; ++k)
    m[static_cast<size_t>(k)][static_cast<size_t>(i)] -=
        cartan[static_cast<size_t>(k)][static_cast<size_t>(i)];
  return m;
}

void build_roots_and_weyl(RootDatum& rd) {
  const int n = rd.rank;
  // Roots in simple-root coordinates: orbit of the simple roots under
  // s_i(alpha_j) = alpha_j - a_ij alpha_i.
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  auto pair_with_coroot = [&](const std::vector<int>& g, int i) {
    // <gamma, alpha_i^vee> with gamma in simple coords = sum_j g_j a_ij
    long s = 0;
    for (int j = 0; j < n; ++j)
      s += static_cast<long>(g[static_cast<size_t>(j)]) *
           rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return s;
  };
  while (!queue.empty()) {
    auto g = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      auto h = g;
      long p = pair_with_coroot(g, i);
      h[static_cast<size_t>(i)] -= static_cast<int>(p);
      if (roots.insert(h).second) queue.push_back(h);
    }
  }
  for (const auto& g : roots) {
    bool pos = std::all_of(g.begin(), g.end(), [](int x) { return x >= 0; });
    if (!pos) continue;
    rd.pos_roots_sc.push_back(g);
  }
  // Sort by (height, lex) for determinism.
  std::sort(rd.pos_roots_sc.begin(), rd.pos_roots_sc.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  for (const auto& g : rd.pos_roots_sc) {
    // fw coords: gamma = sum g_j alpha_j; (alpha_j)_k = a_kj.
    Weight fw(static_cast<size_t>(n), 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        fw[static_cast<size_t>(k)] +=
            g[static_cast<size_t>(j)] *
            rd.cartan[static_cast<size_t>(k)][static_cast<size_t>(j)];
    rd.pos_roots.push_back(fw);
    // (gamma, gamma)/2
    long gg2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gg2 += g[static_cast<size_t>(i)] * g[static_cast<size_t>(j)] *
               rd.d[static_cast<size_t>(i)] *
               rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (gg2 % 2 != 0) throw std::logic_error("root datum: odd (g,g)");
    long dg = gg2 / 2;
    rd.d_root.push_back(dg);
    // coroot = sum g_i (d_i / d_gamma) alpha_i^vee
    Coweight cv(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      long num = static_cast<long>(g[static_cast<size_t>(i)]) *
                 rd.d[static_cast<size_t>(i)];
      if (num % dg != 0) throw std::logic_error("root datum: bad coroot");
      cv[static_cast<size_t>(i)] = static_cast<int>(num / dg);
    }
    rd.pos_coroots.push_back(cv);
  }

  // Weyl group enumeration (BFS; deterministic words).
  const int npos = static_cast<int>(rd.pos_roots_sc.size());
  auto count_inversions = [&](const std::vector<std::vector<int>>& act_sc) {
    int c = 0;
    for (const auto& g : rd.pos_roots_sc) {
      std::vector<int> img(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          img[static_cast<size_t>(i)] +=
              act_sc[static_cast<size_t>(i)][static_cast<size_t>(j)] *
              g[static_cast<size_t>(j)];
      bool neg = std::all_of(img.begin(), img.end(),
                             [](int x) { return x <= 0; });
      if (neg) ++c;
    }
    return c;
  };
  // Simple reflection matrices in simple-root coordinates.
  std::vector<std::vector<std::vector<int>>> refl_sc;
  for (int i = 0; i < n; ++i) {
    auto m = identity_matrix(n);
    for (int j = 0; j < n; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
          rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
    refl_sc.push_back(m);
  }
  std::vector<std::vector<std::vector<int>>> refl_fw;
  for (int i = 0; i < n; ++i)
    refl_fw.push_back(simple_reflection_fw(rd.cartan, i));

  struct Node {
    std::vector<std::vector<int>> act_fw, act_sc;
    std::vector<int> word;
  };
  std::map<std::vector<std::vector<int>>, int> seen;
  std::deque<Node> bfs;
  Node id{identity_matrix(n), identity_matrix(n), {}};
  seen.emplace(id.act_fw, 0);
  bfs.push_back(id);
  WeylElement we;
  we.word = {};
  we.action = id.act_fw;
  we.length = 0;
  rd.weyl.push_back(we);
  while (!bfs.empty()) {
    Node cur = bfs.front();
    bfs.pop_front();
    int curlen = static_cast<int>(cur.word.size());
    for (int i = 0; i < n; ++i) {
      // Extend on the right: w' = w s_i, action matrix = act * S_i.
      Node nx;
      nx.act_fw = mat_mul(cur.act_fw, refl_fw[static_cast<size_t>(i)]);
      nx.act_sc = mat_mul(cur.act_sc, refl_sc[static_cast<size_t>(i)]);
      if (count_inversions(nx.act_sc) != curlen + 1) continue;
      if (seen.count(nx.act_fw)) continue;
      nx.word = cur.word;
      nx.word.push_back(i);
      seen.emplace(nx.act_fw, static_cast<int>(rd.weyl.size()));
      WeylElement e;
      e.word = nx.word;
      e.action = nx.act_fw;
      e.length = curlen + 1;
      rd.weyl.push_back(e);
      bfs.push_back(nx);
    }
  }
  for (size_t k = 0; k < rd.weyl.size(); ++k)
    if (rd.weyl[k].length == npos) rd.longest = static_cast<int>(k);

  // Braid orders.
  rd.m.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        rd.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        continue;
      }
      int p = rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] *
              rd.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)];
      int mij = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : -1;
      if (mij < 0) throw std::logic_error("bad Cartan product");
      rd.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = mij;
    }
}

void check_datum(const RootDatum& rd) {
  for (int i = 0; i < rd.rank; ++i) {
    if (rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(i)] != 2)
      throw std::logic_error("cartan diagonal != 2");
    for (int j = 0; j < rd.rank; ++j) {
      if (rd.d[static_cast<size_t>(i)] *
              rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
          rd.d[static_cast<size_t>(j)] *
              rd.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw std::logic_error("d_i a_ij not symmetric");
    }
  }
}

}  // namespace

std::shared_ptr<const RootDatum> build_root_datum(TypeLabel t, long d_scale) {
  if (d_scale < 1) throw std::invalid_argument("d_scale must be >= 1");
  if (d_scale != 1 && t != TypeLabel::A1)
    throw std::invalid_argument("d_scale is only exposed for A1");
  auto rd = std::make_shared<RootDatum>();
  rd->type = t;
  rd->label = type_to_string(t);
  switch (t) {
    case TypeLabel::A1:
      rd->rank = 1;
      rd->cartan = {{2}};
      rd->d = {d_scale};
      break;
    case TypeLabel::A1xA1:
      rd->rank = 2;
      rd->cartan = {{2, 0}, {0, 2}};
      rd->d = {1, 1};
      break;
    case TypeLabel::A2:
      rd->rank = 2;
      rd->cartan = {{2, -1}, {-1, 2}};
      rd->d = {1, 1};
      break;
    case TypeLabel::B2:
      // Node 0 short (d=1), node 1 long (d=2).
      rd->rank = 2;
      rd->cartan = {{2, -2}, {-1, 2}};
      rd->d = {1, 2};
      break;
    case TypeLabel::A3:
      rd->rank = 3;
      rd->cartan = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
      rd->d = {1, 1, 1};
      break;
    case TypeLabel::G2:
      // Node 0 short (d=1), node 1 long (d=3).
      rd->rank = 2;
      rd->cartan = {{2, -3}, {-1, 2}};
      rd->d = {1, 3};
      break;
  }
  check_datum(*rd);
  build_roots_and_weyl(*rd);
  return rd;
}

std::vector<int> bipartition_J(const RootDatum& rd) {
  const int n = rd.rank;
  std::vector<int> color(static_cast<size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<size_t>(start)] >= 0) continue;
    color[static_cast<size_t>(start)] = 0;
    std::deque<int> q{start};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < n; ++v) {
        if (v == u ||
            rd.cartan[static_cast<size_t>(u)][static_cast<size_t>(v)] >= 0)
          continue;
        if (color[static_cast<size_t>(v)] < 0) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          q.push_back(v);
        } else if (color[static_cast<size_t>(v)] ==
                   color[static_cast<size_t>(u)]) {
          throw std::logic_error("Dynkin graph not bipartite");
        }
      }
    }
  }
  std::vector<int> J;
  for (int i = 0; i < n; ++i)
    if (color[static_cast<size_t>(i)] == color[0]) J.push_back(i);
  return J;
}

bool valid_bipartition(const RootDatum& rd, const std::vector<int>& J) {
  std::vector<bool> in(static_cast<size_t>(rd.rank), false);
  for (int i : J) {
    if (i < 0 || i >= rd.rank) return false;
    in[static_cast<size_t>(i)] = true;
  }
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) {
      if (i == j) continue;
      if (rd.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] < 0 &&
          in[static_cast<size_t>(i)] == in[static_cast<size_t>(j)])
        return false;
    }
  return true;
}

std::map<Weight, long> RootDatum::weight_multiplicities(
    const Weight& lam) const {
  if (!dominant(lam)) throw std::invalid_argument("freudenthal: not dominant");
  // Enumerate candidate weights mu <= lam with lam - mu in Q^+ and mu in the
  // convex hull; organize by height of lam - mu.
  std::map<Weight, long> mult;
  std::map<Weight, BigRat> norm_cache;
  Weight r = rho();
  auto norm_rho = [&](const Weight& mu) {
    Weight m = mu;
    for (int i = 0; i < rank; ++i) m[static_cast<size_t>(i)] += 1;
    return form(m, m);
  };
  BigRat nl = norm_rho(lam);
  // BFS downward by subtracting simple roots.
  std::map<Weight, long> level;  // height of lam - mu
  std::deque<Weight> queue;
  level[lam] = 0;
  queue.push_back(lam);
  std::vector<Weight> order{lam};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Weight nu = mu;
      Weight ai = alpha(i);
      for (int k = 0; k < rank; ++k)
        nu[static_cast<size_t>(k)] -= ai[static_cast<size_t>(k)];
      if (level.count(nu)) continue;
      // Prune: (nu+rho, nu+rho) must not exceed (lam+rho, lam+rho).
      if (norm_rho(nu) > nl) continue;
      level[nu] = level[mu] + 1;
      queue.push_back(nu);
      order.push_back(nu);
    }
  }
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    if (level[a] != level[b]) return level[a] < level[b];
    return a < b;
  });
  mult[lam] = 1;
  for (const Weight& mu : order) {
    if (mu == lam) continue;
    // Freudenthal: ((lam+rho)^2 - (mu+rho)^2) m(mu)
    //            = 2 sum_{gamma>0} sum_{k>=1} m(mu + k gamma) (mu + k gamma, gamma)
    BigRat lhs_coeff = nl - norm_rho(mu);
    BigRat rhs = 0;
    for (size_t g = 0; g < pos_roots.size(); ++g) {
      // |mu+rho| <= |lam+rho| and the norm is convex along the gamma ray, so
      // the admissible k form a contiguous range starting at 1.
      for (long k = 1;; ++k) {
        Weight xi = mu;
        for (int i = 0; i < rank; ++i)
          xi[static_cast<size_t>(i)] +=
              static_cast<int>(k) * pos_roots[g][static_cast<size_t>(i)];
        if (norm_rho(xi) > nl) break;
        auto it = mult.find(xi);
        if (it == mult.end() || it->second == 0) continue;
        rhs += BigRat(2) * BigRat(it->second) * form(xi, pos_roots[g]);
        rhs.canonicalize();
      }
    }
    if (lhs_coeff == 0) {
      mult[mu] = 0;
      continue;
    }
    BigRat m = rhs / lhs_coeff;
    m.canonicalize();
    if (m.get_den() != 1 || m < 0)
      throw std::logic_error("freudenthal: non-integral multiplicity");
    mult[mu] = static_cast<long>(m.get_num().get_si());
  }
  std::erase_if(mult, [](const auto& kv) { return kv.second == 0; });
  return mult;
}

bool SharpDatum::in_sharp_X(const Weight& lam) const {
  for (int i = 0; i < base->rank; ++i)
    if (lam[static_cast<size_t>(i)] % static_cast<int>(r_i[static_cast<size_t>(i)]) != 0)
      return false;
  return true;
}

bool SharpDatum::in_sharp_X_plus(const Weight& lam) const {
  return in_sharp_X(lam) && base->dominant(lam);
}

Weight SharpDatum::to_sharp_coords(const Weight& lam) const {
  if (!in_sharp_X(lam))
    throw std::invalid_argument("to_sharp_coords: weight not in sharp X");
  Weight out = lam;
  for (int i = 0; i < base->rank; ++i)
    out[static_cast<size_t>(i)] /= static_cast<int>(r_i[static_cast<size_t>(i)]);
  return out;
}

Weight SharpDatum::from_sharp_coords(const Weight& lam) const {
  Weight out = lam;
  for (int i = 0; i < base->rank; ++i)
    out[static_cast<size_t>(i)] *= static_cast<int>(r_i[static_cast<size_t>(i)]);
  return out;
}

SharpDatum sharp_datum(std::shared_ptr<const RootDatum> rd, long ell) {
  if (ell < 1) throw std::invalid_argument("sharp_datum: ell < 1");
  SharpDatum sd;
  sd.ell = ell;
  sd.base = rd;
  sd.r = (ell % 2 == 1) ? ell : ell / 2;
  for (int i = 0; i < rd->rank; ++i)
    sd.r_i.push_back(sd.r / std::gcd(sd.r, rd->d[static_cast<size_t>(i)]));

  // Verify the congruence description of sharpX over all positive coroots:
  // lam in sharpX iff <lam, gamma^vee> is divisible by r_gamma for every
  // positive root gamma. The diagonal description {r_i varpi_i} must match.
  // Every congruence has period r in each coordinate (r_gamma | r), and the
  // diagonal lattice has period r_i | r, so [0, r)^rank is a full period.
  double box = 1;
  for (int i = 0; i < rd->rank; ++i) box *= static_cast<double>(sd.r);
  if (box <= 1e6) {
    std::vector<long> r_gamma;
    for (size_t g = 0; g < rd->pos_coroots.size(); ++g)
      r_gamma.push_back(sd.r / std::gcd(sd.r, rd->d_root[g]));
    std::vector<int> idx(static_cast<size_t>(rd->rank), 0);
    while (true) {
      Weight lam(idx.begin(), idx.end());
      bool cong = true;
      for (size_t g = 0; g < rd->pos_coroots.size(); ++g)
        if (rd->pair(lam, rd->pos_coroots[g]) % r_gamma[g] != 0) {
          cong = false;
          break;
        }
      if (cong != sd.in_sharp_X(lam))
        throw std::logic_error(
            "sharp_datum: sharpX is not the diagonal lattice");
      int k = 0;
      for (; k < rd->rank; ++k) {
        if (++idx[static_cast<size_t>(k)] < sd.r) break;
        idx[static_cast<size_t>(k)] = 0;
      }
      if (k == rd->rank) break;
    }
  }

  // Build the sharp datum in its own fundamental-weight coordinates.
  auto sharp = std::make_shared<RootDatum>();
  sharp->type = rd->type;
  sharp->label = rd->label + "#";
  sharp->rank = rd->rank;
  sharp->cartan.assign(static_cast<size_t>(rd->rank),
                       std::vector<int>(static_cast<size_t>(rd->rank), 0));
  for (int i = 0; i < rd->rank; ++i)
    for (int j = 0; j < rd->rank; ++j) {
      long num = sd.r_i[static_cast<size_t>(j)] *
                 rd->cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (num % sd.r_i[static_cast<size_t>(i)] != 0)
        throw std::logic_error("sharp_datum: non-integer sharp Cartan");
      sharp->cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<int>(num / sd.r_i[static_cast<size_t>(i)]);
    }
  for (int i = 0; i < rd->rank; ++i)
    sharp->d.push_back(sd.r_i[static_cast<size_t>(i)] *
                       sd.r_i[static_cast<size_t>(i)] *
                       rd->d[static_cast<size_t>(i)]);
  check_datum(*sharp);
  build_roots_and_weyl(*sharp);
  sd.sharp = sharp;
  return sd;
}

}  // namespace quflag
