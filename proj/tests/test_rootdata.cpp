#include <numeric>

#include "doctest.h"
#include "quflag/rootdata.hpp"

using namespace quflag;

TEST_CASE("build_root_datum tables") {
  auto a1 = build_root_datum(TypeLabel::A1);
  CHECK(a1->rank == 1);
  CHECK(a1->cartan == std::vector<std::vector<int>>{{2}});
  CHECK(a1->d == std::vector<long>{1});
  CHECK(a1->pos_roots.size() == 1);

  auto a2 = build_root_datum(TypeLabel::A2);
  CHECK(a2->cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2->d == std::vector<long>{1, 1});
  CHECK(a2->pos_roots.size() == 3);

  auto b2 = build_root_datum(TypeLabel::B2);
  CHECK(b2->cartan[0][1] * b2->cartan[1][0] == 2);
  CHECK(b2->d == std::vector<long>{1, 2});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(b2->d[static_cast<size_t>(i)] *
                b2->cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            b2->d[static_cast<size_t>(j)] *
                b2->cartan[static_cast<size_t>(j)][static_cast<size_t>(i)]);
  CHECK(b2->pos_roots.size() == 4);

  CHECK_THROWS(build_root_datum(TypeLabel::A2, 2));
}

TEST_CASE("weyl group enumeration") {
  CHECK(build_root_datum(TypeLabel::A1)->weyl.size() == 2);
  auto a2 = build_root_datum(TypeLabel::A2);
  CHECK(a2->weyl.size() == 6);
  CHECK(a2->w0().word == std::vector<int>{0, 1, 0});
  CHECK(build_root_datum(TypeLabel::B2)->weyl.size() == 8);
  CHECK(build_root_datum(TypeLabel::A1xA1)->weyl.size() == 4);
  // Word/action consistency, length = inversions.
  for (auto t : {TypeLabel::A2, TypeLabel::B2}) {
    auto rd = build_root_datum(t);
    for (const auto& w : rd->weyl) {
      for (int i = 0; i < rd->rank; ++i) {
        Weight e(static_cast<size_t>(rd->rank), 0);
        e[static_cast<size_t>(i)] = 1;
        Weight img = e;
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
          img = rd->act_simple(*it, img);
        CHECK(img == rd->act(w, e));
      }
      CHECK(static_cast<int>(w.word.size()) == w.length);
      int inv = 0;
      for (const auto& g : rd->pos_roots)
        if (rd->height_in_Q(rd->act(w, g)) < 0) ++inv;
      CHECK(inv == w.length);
    }
  }
}

TEST_CASE("braid relations of action matrices") {
  for (auto t : {TypeLabel::A1xA1, TypeLabel::A2, TypeLabel::B2}) {
    auto rd = build_root_datum(t);
    for (int i = 0; i < rd->rank; ++i)
      for (int j = 0; j < rd->rank; ++j) {
        if (i == j) continue;
        int mij = rd->m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int k = 0; k < rd->rank; ++k) {
          Weight e(static_cast<size_t>(rd->rank), 0);
          e[static_cast<size_t>(k)] = 1;
          Weight x = e, y = e;
          for (int s = 0; s < mij; ++s) {
            x = rd->act_simple(s % 2 == 0 ? i : j, x);
            y = rd->act_simple(s % 2 == 0 ? j : i, y);
          }
          CHECK(x == y);
        }
      }
  }
}

TEST_CASE("weights and actions") {
  auto a1 = build_root_datum(TypeLabel::A1);
  CHECK(a1->act_simple(0, Weight{3}) == Weight{-3});
  auto a2 = build_root_datum(TypeLabel::A2);
  CHECK(a2->pair(Weight{1, 0}, Coweight{0, 1}) == 0);
  CHECK(a2->act(a2->w0(), Weight{1, 0}) == Weight{0, -1});
  CHECK(a2->dominant(Weight{2, 0}));
  CHECK_FALSE(a2->dominant(Weight{-1, 2}));
  Weight g = a2->alpha(0);
  Weight g2 = a2->alpha(1);
  for (int k = 0; k < 2; ++k)
    g[static_cast<size_t>(k)] += g2[static_cast<size_t>(k)];
  CHECK(a2->height_in_Q(g) == 2);
}

TEST_CASE("bipartition J") {
  auto a1 = build_root_datum(TypeLabel::A1);
  CHECK(bipartition_J(*a1) == std::vector<int>{0});
  auto a2 = build_root_datum(TypeLabel::A2);
  CHECK(bipartition_J(*a2) == std::vector<int>{0});
  CHECK(valid_bipartition(*a2, {0}));
  CHECK(valid_bipartition(*a2, {1}));
  CHECK_FALSE(valid_bipartition(*a2, {0, 1}));
  auto b2 = build_root_datum(TypeLabel::B2);
  CHECK(bipartition_J(*b2) == std::vector<int>{0});
  auto a11 = build_root_datum(TypeLabel::A1xA1);
  CHECK(bipartition_J(*a11) == std::vector<int>{0, 1});
  CHECK(valid_bipartition(*a11, {}));  // no edges: any subset works
}

TEST_CASE("weyl dimension formula") {
  auto a1 = build_root_datum(TypeLabel::A1);
  CHECK(a1->weyl_dim(Weight{3}) == 4);
  auto a2 = build_root_datum(TypeLabel::A2);
  CHECK(a2->weyl_dim(Weight{1, 0}) == 3);
  CHECK(a2->weyl_dim(Weight{1, 1}) == 8);
  CHECK(a2->weyl_dim(Weight{5, 4}) == 165);
  auto b2 = build_root_datum(TypeLabel::B2);
  CHECK(b2->weyl_dim(Weight{1, 0}) == 4);   // spin
  CHECK(b2->weyl_dim(Weight{0, 1}) == 5);   // vector
  CHECK(b2->weyl_dim(Weight{2, 0}) == 10);  // adjoint
  CHECK(b2->weyl_dim(Weight{1, 1}) == 16);
  CHECK(b2->weyl_dim(Weight{5, 4}) == 880);
}

TEST_CASE("freudenthal multiplicities") {
  auto a2 = build_root_datum(TypeLabel::A2);
  auto m = a2->weight_multiplicities(Weight{1, 1});
  CHECK(m.at(Weight{1, 1}) == 1);
  CHECK(m.at(Weight{0, 0}) == 2);
  long total = 0;
  for (const auto& [w, k] : m) total += k;
  CHECK(total == 8);
  auto b2 = build_root_datum(TypeLabel::B2);
  auto mb = b2->weight_multiplicities(Weight{2, 0});
  CHECK(mb.at(Weight{0, 0}) == 2);
  long totb = 0;
  for (const auto& [w, k] : mb) totb += k;
  CHECK(totb == 10);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      auto mm = b2->weight_multiplicities(Weight{a, b});
      long tot = 0;
      for (const auto& [w, k] : mm) tot += k;
      CHECK(BigInt(tot) == b2->weyl_dim(Weight{a, b}));
    }
}

TEST_CASE("sharp datum") {
  auto a1 = build_root_datum(TypeLabel::A1);
  SUBCASE("ell=2 is trivial") {
    auto sd = sharp_datum(a1, 2);
    CHECK(sd.r == 1);
    CHECK(sd.r_i == std::vector<long>{1});
    CHECK(sd.in_sharp_X(Weight{1}));
    CHECK(sd.sharp->cartan == a1->cartan);
    CHECK(sd.sharp->d == a1->d);
  }
  SUBCASE("A1 ell=3") {
    auto sd = sharp_datum(a1, 3);
    CHECK(sd.r == 3);
    CHECK(sd.r_i == std::vector<long>{3});
    CHECK(sd.in_sharp_X(Weight{3}));
    CHECK_FALSE(sd.in_sharp_X(Weight{2}));
    CHECK(sd.to_sharp_coords(Weight{3}) == Weight{1});
    CHECK(sd.sharp->d == std::vector<long>{9});
  }
  SUBCASE("B2 ell=4") {
    auto b2 = build_root_datum(TypeLabel::B2);
    auto sd = sharp_datum(b2, 4);
    CHECK(sd.r == 2);
    CHECK(sd.r_i == std::vector<long>{2, 1});
    CHECK(sd.in_sharp_X(Weight{2, 1}));
    CHECK_FALSE(sd.in_sharp_X(Weight{1, 0}));
    // Sharp Cartan is the dual pattern (short and long swapped).
    CHECK(sd.sharp->cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(sd.sharp->d == std::vector<long>{4, 2});
    for (int a = -2; a <= 4; ++a)
      for (int b = -2; b <= 4; ++b) {
        Weight w{a, b};
        CHECK(sd.in_sharp_X_plus(w) == (sd.in_sharp_X(w) && b2->dominant(w)));
      }
  }
  SUBCASE("zeta^(r_alpha^2 d_alpha) is +-1 for every root") {
    for (auto t : {TypeLabel::A1, TypeLabel::A2, TypeLabel::B2}) {
      auto rd = build_root_datum(t);
      for (long ell = 1; ell <= 8; ++ell) {
        auto sd = sharp_datum(rd, ell);
        for (size_t g = 0; g < rd->pos_coroots.size(); ++g) {
          long ra = sd.r / std::gcd(sd.r, rd->d_root[g]);
          long e = ra * ra * rd->d_root[g];
          CHECK((2 * e) % ell == 0);
        }
      }
    }
  }
}

TEST_CASE("A1 d-scale knob") {
  auto a1s = build_root_datum(TypeLabel::A1, 2);
  CHECK(a1s->d == std::vector<long>{2});
  auto sd = sharp_datum(a1s, 4);
  CHECK(sd.r == 2);
  CHECK(sd.r_i == std::vector<long>{1});  // gcd(2, d=2) = 2
}

TEST_CASE("experimental types construct") {
  auto a3 = build_root_datum(TypeLabel::A3);
  CHECK(a3->weyl.size() == 24);
  CHECK(a3->pos_roots.size() == 6);
  CHECK(a3->weyl_dim(Weight{1, 0, 0}) == 4);
  CHECK(a3->weyl_dim(Weight{0, 1, 0}) == 6);
  auto g2 = build_root_datum(TypeLabel::G2);
  CHECK(g2->weyl.size() == 12);
  CHECK(g2->pos_roots.size() == 6);
  CHECK(g2->weyl_dim(Weight{1, 0}) == 7);
  CHECK(g2->weyl_dim(Weight{0, 1}) == 14);
  CHECK(type_is_experimental(TypeLabel::G2));
  CHECK_FALSE(type_is_experimental(TypeLabel::B2));
}
