#include "quflag/weightmodule.hpp"

#include <deque>

namespace quflag {
namespace detail {

namespace {

Weight sub_alpha(const RootDatum& rd, const Weight& w, int node) {
  Weight r = w;
  Weight a = rd.alpha(node);
  for (int t = 0; t < rd.rank; ++t)
    r[static_cast<size_t>(t)] -= a[static_cast<size_t>(t)];
  return r;
}

// Chain module: weights form a single path, every arrow coefficient 1.
BasicSpec chain_spec(const RootDatum& rd, int hw_node,
                     const std::vector<int>& fnodes) {
  BasicSpec s;
  s.hw_node = hw_node;
  Weight w(static_cast<size_t>(rd.rank), 0);
  w[static_cast<size_t>(hw_node)] = 1;
  s.weights.push_back(w);
  int idx = 0;
  for (int node : fnodes) {
    w = sub_alpha(rd, w, node);
    s.weights.push_back(w);
    s.arrows.push_back({'f', node, 1, idx, idx + 1, LaurentPoly(1)});
    s.arrows.push_back({'e', node, 1, idx + 1, idx, LaurentPoly(1)});
    ++idx;
  }
  return s;
}

}  // namespace

BasicSpec basic_module_spec(const RootDatum& rd) {
  switch (rd.type) {
    case TypeLabel::A1:
    case TypeLabel::A1xA1:
      return chain_spec(rd, 0, {0});
    case TypeLabel::A2:
      return chain_spec(rd, 0, {0, 1});
    case TypeLabel::A3:
      return chain_spec(rd, 0, {0, 1, 2});
    case TypeLabel::B2: {
      int s = rd.d[0] <= rd.d[1] ? 0 : 1;
      int t = 1 - s;
      return chain_spec(rd, s, {s, t, s});
    }
    case TypeLabel::G2: {
      int s = rd.d[0] <= rd.d[1] ? 0 : 1;
      int t = 1 - s;
      BasicSpec sp = chain_spec(rd, s, {s, t, s, s, t, s});
      // The middle alpha_s string has length three: fix its divided-power
      // structure (w2 --f_s--> w3 --f_s--> w4 with w4 = f_s^{(2)} w2).
      LaurentPoly one(1);
      LaurentPoly two = q_integer_d(2, rd.d[static_cast<size_t>(s)]);
      sp.arrows = {
          {'f', s, 1, 0, 1, one}, {'f', s, 1, 2, 3, one},
          {'f', s, 1, 3, 4, two}, {'f', s, 1, 5, 6, one},
          {'f', s, 2, 2, 4, one},
          {'e', s, 1, 1, 0, one}, {'e', s, 1, 3, 2, two},
          {'e', s, 1, 4, 3, one}, {'e', s, 1, 6, 5, one},
          {'e', s, 2, 4, 2, one},
          {'f', t, 1, 1, 2, one}, {'f', t, 1, 4, 5, one},
          {'e', t, 1, 2, 1, one}, {'e', t, 1, 5, 4, one},
      };
      return sp;
    }
  }
  throw std::logic_error("basic_module_spec: bad type");
}

namespace {

ModulePtr<RatFunc> module_from_spec(std::shared_ptr<const RootDatum> rd,
                                    const BasicSpec& s) {
  auto m = std::make_shared<BaseWeightModule<RatFunc>>();
  m->datum = rd;
  m->field = FieldCtx{};
  Weight hw(static_cast<size_t>(rd->rank), 0);
  hw[static_cast<size_t>(s.hw_node)] = 1;
  m->name = "V(" + weight_str(hw) + ")";
  m->wt = s.weights;
  int maxn = 1;
  for (const auto& a : s.arrows) maxn = std::max(maxn, a.n);
  m->stored_bound = maxn;
  for (char kc : {'e', 'f'})
    for (int nd = 0; nd < rd->rank; ++nd)
      for (int n = 1; n <= maxn; ++n) {
        SparseMat<RatFunc> mat;
        mat.nrows = m->dim();
        mat.cols.assign(static_cast<size_t>(m->dim()), {});
        m->ops.emplace(std::make_tuple(kc, nd, n), std::move(mat));
      }
  for (const auto& a : s.arrows)
    m->ops.at(std::make_tuple(a.kind, a.node, a.n))
        .cols[static_cast<size_t>(a.from)]
        .emplace_back(a.to, RatFunc(a.coeff));
  m->finalize_blocks();
  return m;
}

// Hand-coded chains beyond the distinguished basic one (dual naturals and
// the second A1 factor); everything else is derived by hw_submodule.
std::optional<BasicSpec> secondary_chain_spec(const RootDatum& rd, int node) {
  switch (rd.type) {
    case TypeLabel::A1xA1:
      if (node == 1) return chain_spec(rd, 1, {1});
      return std::nullopt;
    case TypeLabel::A2:
      if (node == 1) return chain_spec(rd, 1, {1, 0});
      return std::nullopt;
    case TypeLabel::A3:
      if (node == 2) return chain_spec(rd, 2, {2, 1, 0});
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace
}  // namespace detail

ModulePtr<RatFunc> hw_submodule(ModulePtr<RatFunc> ambient, const Weight& lam,
                                std::optional<SparseVec<RatFunc>> seed) {
  const RootDatum& rd = *ambient->datum;
  if (!ambient->field.generic())
    throw std::invalid_argument("hw_submodule requires the generic field");
  RatFunc one(1);

  if (!seed) {
    // Solve for a highest-weight vector in the lam block: the joint kernel
    // of the e_i.
    const auto& blk = ambient->block(lam);
    if (blk.empty())
      throw std::invalid_argument("hw_submodule: no vector of weight lambda");
    std::map<std::pair<int, int>, int> constraint_index;
    std::vector<SparseVec<RatFunc>> images(blk.size() * static_cast<size_t>(rd.rank));
    for (size_t bi = 0; bi < blk.size(); ++bi)
      for (int node = 0; node < rd.rank; ++node) {
        SparseVec<RatFunc> img = ambient->column(OpKind::E, node, 1, blk[bi]);
        for (const auto& [r, c] : img)
          constraint_index.emplace(std::make_pair(node, r),
                                   static_cast<int>(constraint_index.size()));
        images[bi * static_cast<size_t>(rd.rank) + static_cast<size_t>(node)] =
            std::move(img);
      }
    size_t ncons = constraint_index.size();
    // rows: one per constraint, columns indexed by the block vectors.
    std::vector<std::vector<RatFunc>> rows(
        ncons, std::vector<RatFunc>(blk.size(), RatFunc(0)));
    for (size_t bi = 0; bi < blk.size(); ++bi)
      for (int node = 0; node < rd.rank; ++node)
        for (const auto& [r, c] :
             images[bi * static_cast<size_t>(rd.rank) + static_cast<size_t>(node)])
          rows[static_cast<size_t>(constraint_index.at({node, r}))][bi] = c;
    std::vector<int> pivot_col;
    size_t rr = 0;
    for (size_t c = 0; c < blk.size() && rr < rows.size(); ++c) {
      size_t p = rr;
      while (p < rows.size() && rows[p][c].is_zero()) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[rr], rows[p]);
      for (size_t k = 0; k < rows.size(); ++k) {
        if (k == rr || rows[k][c].is_zero()) continue;
        RatFunc f = rows[k][c] / rows[rr][c];
        for (size_t c2 = 0; c2 < blk.size(); ++c2)
          rows[k][c2] -= f * rows[rr][c2];
      }
      pivot_col.push_back(static_cast<int>(c));
      ++rr;
    }
    size_t kernel_dim = blk.size() - pivot_col.size();
    if (kernel_dim == 0)
      throw std::invalid_argument(
          "hw_submodule: no highest vector of weight lambda");
    if (kernel_dim > 1)
      throw std::invalid_argument("hw_submodule: highest vector not unique");
    std::vector<bool> is_pivot(blk.size(), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    size_t freec = 0;
    while (freec < blk.size() && is_pivot[freec]) ++freec;
    std::vector<RatFunc> x(blk.size(), RatFunc(0));
    x[freec] = one;
    for (size_t pr = 0; pr < pivot_col.size(); ++pr) {
      size_t c = static_cast<size_t>(pivot_col[pr]);
      x[c] = -(rows[pr][freec] / rows[pr][c]);
    }
    SparseVec<RatFunc> sv;
    for (size_t bi = 0; bi < blk.size(); ++bi)
      if (!x[bi].is_zero()) sv.emplace_back(blk[bi], x[bi]);
    seed = sv;
  }

  // BFS closure under the f_i (generic q: higher divided powers span the
  // same subspace).
  auto mod = std::make_shared<SubWeightModule>();
  mod->datum = ambient->datum;
  mod->field = ambient->field;
  mod->name = "V(" + weight_str(lam) + ")";
  mod->ambient = ambient;

  auto insert_vec = [&](const SparseVec<RatFunc>& v) -> bool {
    if (v.empty()) return false;
    Weight w = ambient->wt[static_cast<size_t>(v.front().first)];
    auto it = mod->sub.find(w);
    if (it == mod->sub.end()) {
      SubWeightModule::Block blk;
      blk.ambient_block = ambient->block(w);
      blk.lat = DvrLattice(0, static_cast<int>(blk.ambient_block.size()));
      it = mod->sub.emplace(w, std::move(blk)).first;
    }
    auto& blk = it->second;
    std::vector<RatFunc> dense(blk.ambient_block.size(), RatFunc(0));
    size_t p = 0;
    for (const auto& [r, c] : v) {
      while (p < blk.ambient_block.size() && blk.ambient_block[p] < r) ++p;
      if (p == blk.ambient_block.size() || blk.ambient_block[p] != r)
        throw InternalError("hw_submodule: vector not weight-homogeneous");
      dense[p] = c;
    }
    return blk.lat.insert(std::move(dense), 0);
  };

  std::deque<SparseVec<RatFunc>> queue;
  if (!insert_vec(*seed))
    throw std::invalid_argument("hw_submodule: zero seed");
  queue.push_back(*seed);
  while (!queue.empty()) {
    SparseVec<RatFunc> v = std::move(queue.front());
    queue.pop_front();
    for (int node = 0; node < rd.rank; ++node) {
      SparseVec<RatFunc> y = ambient->apply(OpKind::F, node, 1, v);
      if (y.empty()) continue;
      if (insert_vec(y)) queue.push_back(std::move(y));
    }
  }

  // Freeze: lay out the basis by weight order, rows in echelon order.
  std::vector<Weight> order;
  for (const auto& [w, blk] : mod->sub) order.push_back(w);
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    return weight_before(rd, a, b);
  });
  for (const Weight& w : order) {
    auto& blk = mod->sub.at(w);
    for (const auto& row : blk.lat.rows()) {
      int idx = mod->dim();
      blk.module_index.push_back(idx);
      mod->wt.push_back(w);
      SparseVec<RatFunc> amb;
      for (size_t c = 0; c < row.v.size(); ++c)
        if (!row.v[c].is_zero())
          amb.emplace_back(blk.ambient_block[c], row.v[c]);
      mod->basis.push_back(std::move(amb));
    }
  }
  mod->finalize_blocks();

  // Character checks against the independent oracles.
  if (BigInt(mod->dim()) != rd.weyl_dim(lam))
    throw InternalError(
        "hw_submodule: dimension differs from Weyl formula for V(" +
        weight_str(lam) + ")");
  auto mults = rd.weight_multiplicities(lam);
  for (const auto& [w, k] : mults)
    if (static_cast<long>(mod->block(w).size()) != k)
      throw InternalError("hw_submodule: weight multiplicity mismatch at " +
                          weight_str(w));
  return mod;
}

ModulePtr<RatFunc> fundamental_module(std::shared_ptr<const RootDatum> rd,
                                      int node) {
  if (node < 0 || node >= rd->rank)
    throw std::invalid_argument("fundamental_module: bad node");
  detail::BasicSpec spec = detail::basic_module_spec(*rd);
  if (spec.hw_node == node) return detail::module_from_spec(rd, spec);
  if (auto sec = detail::secondary_chain_spec(*rd, node))
    return detail::module_from_spec(rd, *sec);
  // Remaining fundamentals sit inside tensor squares of the basic module
  // (or basic (x) Lambda^2 for the middle node of A3).
  Weight target(static_cast<size_t>(rd->rank), 0);
  target[static_cast<size_t>(node)] = 1;
  auto b = detail::module_from_spec(rd, spec);
  if (rd->type == TypeLabel::A3 && node == 1)
    return hw_submodule(tensor<RatFunc>(b, b), target);
  if (rd->type == TypeLabel::A2 || rd->type == TypeLabel::B2 ||
      rd->type == TypeLabel::G2)
    return hw_submodule(tensor<RatFunc>(b, b), target);
  throw std::invalid_argument("fundamental_module: unsupported node");
}

}  // namespace quflag
