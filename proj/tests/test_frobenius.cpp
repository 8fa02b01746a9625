#include "doctest.h"
#include "quflag/frobenius.hpp"
#include "quflag/relations.hpp"
#include "quflag/workspace.hpp"

using namespace quflag;

TEST_CASE("Frobenius pullback: A1 at ell=3") {
  auto rd = build_root_datum(TypeLabel::A1);
  auto sd = sharp_datum(rd, 3);
  Workspace sws(sd.sharp);
  auto sharp_nabla = sws.specialized<CycloNum>(Weight{1}, 3);  // sharp V(3w)
  auto pb = frobenius_pullback<CycloNum>(sd, sharp_nabla->nabla);
  CHECK(pb->dim() == 2);
  CHECK(pb->wt[0] == Weight{3});
  CHECK(pb->wt[1] == Weight{-3});
  const CycloNum one = CycloNum::one(3);
  // f_1 acts by zero, f_1^{(3)} by the sharp f.
  CHECK(pb->apply(OpKind::F, 0, 1, unit_vec(0, one)).empty());
  CHECK(pb->apply(OpKind::F, 0, 2, unit_vec(0, one)).empty());
  auto f3 = pb->apply(OpKind::F, 0, 3, unit_vec(0, one));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].first == 1);
  CHECK(f3[0].second == one);
  CHECK(pb->apply(OpKind::E, 0, 2, f3).empty());
  // The pullback satisfies the defining relations of the original datum.
  CHECK(check_defining_relations(*pb).pass);
}

TEST_CASE("Frobenius pullback at r=1 is a relabeling") {
  auto rd = build_root_datum(TypeLabel::A1);
  auto sd = sharp_datum(rd, 2);
  CHECK(sd.r_i == std::vector<long>{1});
  Workspace sws(sd.sharp);
  auto sn = sws.specialized<CycloNum>(Weight{2}, 2);
  auto pb = frobenius_pullback<CycloNum>(sd, sn->nabla);
  CHECK(pb->dim() == sn->nabla->dim());
  const CycloNum one = CycloNum::one(2);
  for (int j = 0; j < pb->dim(); ++j) {
    CHECK(pb->wt[j] == sn->nabla->wt[j]);
    CHECK(detail::vec_eq(pb->apply(OpKind::F, 0, 1, unit_vec(j, one)),
                         sn->nabla->apply(OpKind::F, 0, 1, unit_vec(j, one))));
  }
}

TEST_CASE("pullback of tensor = tensor of pullbacks") {
  auto rd = build_root_datum(TypeLabel::B2);
  auto sd = sharp_datum(rd, 4);
  Workspace sws(sd.sharp);
  auto a = sws.specialized<CycloNum>(Weight{1, 0}, 4);
  auto b = sws.specialized<CycloNum>(Weight{0, 1}, 4);
  auto lhs = frobenius_pullback<CycloNum>(
      sd, tensor<CycloNum>(a->nabla, b->nabla));
  auto rhs = tensor<CycloNum>(frobenius_pullback<CycloNum>(sd, a->nabla),
                              frobenius_pullback<CycloNum>(sd, b->nabla));
  REQUIRE(lhs->dim() == rhs->dim());
  const CycloNum one = CycloNum::one(4);
  for (int node = 0; node < 2; ++node) {
    int bound = lhs->power_bound(node);
    for (int n = 1; n <= bound; ++n)
      for (int j = 0; j < lhs->dim(); ++j) {
        CHECK(detail::vec_eq(lhs->column(OpKind::E, node, n, j),
                             rhs->column(OpKind::E, node, n, j)));
        CHECK(detail::vec_eq(lhs->column(OpKind::F, node, n, j),
                             rhs->column(OpKind::F, node, n, j)));
      }
  }
  CHECK(check_defining_relations(*lhs).pass);
}

TEST_CASE("extremal isomorphisms") {
  SUBCASE("A1 ell=3 lambda=3w") {
    auto rd = build_root_datum(TypeLabel::A1);
    Workspace ws(rd);
    auto sw = ws.specialized<CycloNum>(Weight{3}, 3);
    auto rep = verify_extremal_iso(*sw);
    CHECK(rep.pass);
  }
  SUBCASE("A1 ell=4 lambda=2w") {
    auto rd = build_root_datum(TypeLabel::A1);
    auto sd = sharp_datum(rd, 4);
    CHECK(sd.in_sharp_X_plus(Weight{2}));
    Workspace ws(rd);
    auto sw = ws.specialized<CycloNum>(Weight{2}, 4);
    CHECK(verify_extremal_iso(*sw).pass);
  }
  SUBCASE("A2 ell=3 lambda=3w1, all six w") {
    auto rd = build_root_datum(TypeLabel::A2);
    auto sd = sharp_datum(rd, 3);
    CHECK(sd.in_sharp_X_plus(Weight{3, 0}));
    Workspace ws(rd);
    auto sw = ws.specialized<CycloNum>(Weight{3, 0}, 3);
    auto rep = verify_extremal_iso(*sw);
    CHECK(rep.pass);
    CHECK(rep.items.size() == 12);  // dim + canonical per w
  }
}
