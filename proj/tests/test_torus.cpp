#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asf/torus.hpp"

using namespace asf;

namespace {
ApartmentPoint pt(std::initializer_list<Rat> cs) {
  ApartmentPoint p;
  p.coords = cs;
  return p;
}
}  // namespace

TEST_CASE("coxeter_point values") {
  auto a1 = RootDatum::build(Family::A, 1, Isogeny::simply_connected);
  CHECK(pair(a1.simple_roots()[0], coxeter_point(a1)) == Rat(1, 2));

  auto a2 = RootDatum::build(Family::A, 2, Isogeny::simply_connected);
  auto x2 = coxeter_point(a2);
  CHECK(pair(a2.simple_roots()[0], x2) == Rat(1, 3));
  CHECK(pair(a2.simple_roots()[1], x2) == Rat(1, 3));

  auto gl3 = RootDatum::build(Family::A, 2, Isogeny::gl);
  auto xg = coxeter_point(gl3);
  for (const auto& sr : gl3.simple_roots()) CHECK(pair(sr, xg) == Rat(1, 3));
}

TEST_CASE("coxeter_point is interior and its Levi is the torus") {
  for (auto [fam, rank, iso] : std::vector<std::tuple<Family, int, Isogeny>>{
           {Family::A, 1, Isogeny::simply_connected},
           {Family::A, 3, Isogeny::simply_connected},
           {Family::A, 2, Isogeny::gl},
           {Family::B, 2, Isogeny::simply_connected},
           {Family::B, 3, Isogeny::simply_connected},
           {Family::C, 3, Isogeny::simply_connected},
           {Family::D, 4, Isogeny::simply_connected},
           {Family::G2, 2, Isogeny::adjoint}}) {
    auto d = RootDatum::build(fam, rank, iso);
    auto x = coxeter_point(d);
    CHECK(d.alcove_position(x).interior);
    CHECK(levi_at(d, x).is_torus());
  }
}

TEST_CASE("levi_at") {
  auto a2 = RootDatum::build(Family::A, 2, Isogeny::simply_connected);
  CHECK(levi_at(a2, zero_point(2)).roots().size() == a2.roots().size());
  // alpha1 = 0, alpha2 = 1/2 at x = (1/6, 1/3)
  auto levi = levi_at(a2, pt({Rat(1, 6), Rat(1, 3)}));
  CHECK(levi.rank() == 1);
  CHECK(levi.roots().size() == 2);
  CHECK(levi.roots()[0] == a2.simple_roots()[0]);
}

TEST_CASE("weakly_coxeter_point") {
  auto a2 = RootDatum::build(Family::A, 2, Isogeny::simply_connected);
  CHECK(weakly_coxeter_point(a2, {0, 1}) == coxeter_point(a2));

  auto gl2 = RootDatum::build(Family::A, 1, Isogeny::gl);
  CHECK(pair(gl2.simple_roots()[0], weakly_coxeter_point(gl2, {0})) ==
        Rat(1, 2));

  // M of type A1 inside A2: the M-value is pinned, the rest generic
  auto x = weakly_coxeter_point(a2, {0});
  CHECK(pair(a2.simple_roots()[0], x) == Rat(1, 2));
  CHECK(!is_integer(pair(a2.simple_roots()[1], x)));
  CHECK(a2.alcove_position(x).interior);

  // B3 with a reducible Levi {first, third simple}
  auto b3 = RootDatum::build(Family::B, 3, Isogeny::simply_connected);
  auto xb = weakly_coxeter_point(b3, {0, 2});
  CHECK(pair(b3.simple_roots()[0], xb) == Rat(1, 2));
  CHECK(pair(b3.simple_roots()[2], xb) == Rat(1, 2));
  CHECK(b3.alcove_position(xb).interior);

  CHECK_THROWS(weakly_coxeter_point(a2, {0, 0}));
  CHECK_THROWS(weakly_coxeter_point(a2, {5}));
}

TEST_CASE("point_order") {
  auto a1 = RootDatum::build(Family::A, 1, Isogeny::simply_connected);
  CHECK(point_order(a1, coxeter_point(a1)) == 2);
  auto g2 = RootDatum::build(Family::G2, 2, Isogeny::adjoint);
  CHECK(point_order(g2, coxeter_point(g2)) == 6);
  CHECK(point_order(a1, zero_point(1)) == 1);
}

TEST_CASE("equivalued_admissible") {
  auto a1 = RootDatum::build(Family::A, 1, Isogeny::simply_connected);
  auto ad = adjoint_rep(a1);
  ApartmentPoint x = pt({Rat(1, 4)});  // alpha(x) = 1/2

  auto r1 = equivalued_admissible(a1, x, Rat(3, 2), ad);
  CHECK(r1.ok);
  CHECK(r1.piece.dim() == 2);
  CHECK(r1.order_l == 2);

  auto r2 = equivalued_admissible(a1, x, Rat(1, 3), ad);
  CHECK(!r2.ok);

  // integral valuation: the piece is the (central) zero weight
  auto r3 = equivalued_admissible(a1, x, Rat(1), ad);
  CHECK(!r3.ok);
  auto std_rep = standard_rep(a1);
  // standard rep of SL(2): weights at x are +-1/4; no integral valuation
  // has a nonzero piece
  auto r4 = equivalued_admissible(a1, x, Rat(1), std_rep);
  CHECK(!r4.ok);
  auto r5 = equivalued_admissible(a1, zero_point(1), Rat(1), std_rep);
  CHECK(r5.ok);
  CHECK(r5.warning.empty());
  CHECK(r5.piece.dim() == 2);

  // non-adjoint representation supported on the zero weight: warn only
  Weight zero;
  zero.coords = {Int(0)};
  auto central = rep_from_weights({{zero, 1}}, "central");
  auto r6 = equivalued_admissible(a1, x, Rat(2), central);
  CHECK(r6.ok);
  CHECK(!r6.warning.empty());
}

TEST_CASE("resolve_torus_point") {
  auto a1 = RootDatum::build(Family::A, 1, Isogeny::simply_connected);
  TorusSpec cox;
  cox.mode = TorusMode::coxeter;
  CHECK(resolve_torus_point(a1, cox) == coxeter_point(a1));

  TorusSpec kac;
  kac.mode = TorusMode::kac;
  kac.kac_x = pt({Rat(1, 2)});
  kac.kac_l = 2;
  CHECK(resolve_torus_point(a1, kac) == kac.kac_x);
  kac.kac_l = 3;
  CHECK_THROWS(resolve_torus_point(a1, kac));
}
