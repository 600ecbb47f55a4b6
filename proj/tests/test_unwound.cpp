#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cog/unwound.hpp"

#include <stdexcept>

using namespace cog;

namespace {
QQ qq(const Rat& a, const Rat& b) { return {a, b}; }
}  // namespace

TEST_CASE("unwound addition on Z/10: frozen examples") {
  CyclicGroup G = CyclicGroup::finite(10);
  UnwoundElem r = uw_add(G, {0, Int(6)}, {0, Int(7)});
  CHECK(r.winding == 1);
  CHECK(as_int(r.g) == 3);
  r = uw_add(G, {2, Int(0)}, {3, Int(4)});
  CHECK(r.winding == 5);
  CHECK(as_int(r.g) == 4);
  r = uw_add(G, {0, Int(4)}, {0, Int(6)});
  CHECK(r.winding == 1);
  CHECK(as_int(r.g) == 0);
  r = uw_add(G, {0, Int(2)}, {0, Int(3)});
  CHECK(r.winding == 0);
  CHECK(as_int(r.g) == 5);
}

TEST_CASE("unwound group laws on Z/m and wound stages") {
  std::vector<CyclicGroup> groups = {
      CyclicGroup::finite(6), CyclicGroup::finite(7), CyclicGroup::linear_z(),
      CyclicGroup::qq_wound({qq(Rat(1, 3), Rat(1, 3))})};
  for (const CyclicGroup& G : groups) {
    std::vector<GroupElem> es = sample_elements(G, 7);
    std::vector<UnwoundElem> pts;
    for (int w : {-1, 0, 2})
      for (const auto& e : es) pts.push_back({w, e});
    UnwoundElem zero{0, G.zero()};
    for (const auto& x : pts) {
      // inverses cancel
      CHECK(uw_eq(G, uw_add(G, x, uw_neg(G, x)), zero));
      // identity
      CHECK(uw_eq(G, uw_add(G, x, zero), x));
      for (const auto& y : pts) {
        // commutativity
        CHECK(uw_eq(G, uw_add(G, x, y), uw_add(G, y, x)));
        // order translation-invariance: x < y iff x + t < y + t
        for (const auto& t : pts) {
          CHECK(uw_lt(G, x, y) ==
                uw_lt(G, uw_add(G, x, t), uw_add(G, y, t)));
        }
      }
    }
    // associativity on a smaller slice
    for (size_t i = 0; i < pts.size(); i += 3)
      for (size_t j = 0; j < pts.size(); j += 3)
        for (size_t k = 0; k < pts.size(); k += 3)
          CHECK(uw_eq(G, uw_add(G, uw_add(G, pts[i], pts[j]), pts[k]),
                      uw_add(G, pts[i], uw_add(G, pts[j], pts[k]))));
  }
}

TEST_CASE("unwound order: frozen examples and linearity") {
  CyclicGroup G = CyclicGroup::finite(10);
  CHECK(uw_lt(G, {0, Int(3)}, {1, Int(2)}));
  CHECK(uw_lt(G, {2, Int(1)}, {2, Int(4)}));
  CHECK(uw_lt(G, {0, Int(0)}, {0, Int(3)}));
  CHECK_FALSE(uw_lt(G, {1, Int(2)}, {0, Int(3)}));
  CHECK_FALSE(uw_lt(G, {0, Int(3)}, {0, Int(3)}));
  // trichotomy + transitivity over a block of points
  std::vector<UnwoundElem> pts;
  for (int w : {-1, 0, 1})
    for (Int c = 0; c < 10; ++c) pts.push_back({w, c});
  for (const auto& x : pts)
    for (const auto& y : pts) {
      int rels = (uw_lt(G, x, y) ? 1 : 0) + (uw_lt(G, y, x) ? 1 : 0) +
                 (uw_eq(G, x, y) ? 1 : 0);
      CHECK(rels == 1);
      for (const auto& z : pts)
        if (uw_lt(G, x, y) && uw_lt(G, y, z)) CHECK(uw_lt(G, x, z));
    }
}

TEST_CASE("the winding element is the least positive period") {
  // z = (1, 0) sits at the start of winding block 1 and every element of
  // block 0 is below it
  CyclicGroup G = CyclicGroup::finite(5);
  UnwoundElem z{1, Int(0)};
  for (Int c = 0; c < 5; ++c) CHECK(uw_lt(G, {0, c}, z));
  CHECK(uw_lt(G, z, {1, Int(1)}));
}

TEST_CASE("z_line construction and errors") {
  LinearGroupWithZ T = LinearGroupWithZ::z_line(7);
  CHECK(T.z_int() == 7);
  CHECK(as_int(T.z()) == 7);
  CHECK(as_int(T.add(Int(3), Int(-5))) == -2);
  CHECK(T.lt(Int(-1), Int(0)));
  CHECK_THROWS_WITH_AS(LinearGroupWithZ::z_line(0), "z not cofinal",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(LinearGroupWithZ::z_line(-3), "z not cofinal",
                       std::domain_error);
}

TEST_CASE("qq_line construction, membership, division") {
  LinearGroupWithZ T = LinearGroupWithZ::qq_line({qq(Rat(1, 9), Rat(8, 9))});
  CHECK(T.kind() == LinearGroupWithZ::Kind::QQLine);
  CHECK(T.is_member(GroupElem(qq(Rat(1, 9), Rat(8, 9)))));
  CHECK(T.is_member(T.z()));
  CHECK_FALSE(T.is_member(GroupElem(qq(Rat(1, 9), Rat(0)))));
  // 9 * (1/9, 8/9) = (1, 8) = z + 8*one
  auto d = T.divide_exact(9, T.add(T.z(), T.mul(8, T.one())));
  REQUIRE(d.has_value());
  CHECK(as_qq(*d) == qq(Rat(1, 9), Rat(8, 9)));
  CHECK_FALSE(T.divide_exact(9, T.z()).has_value());
  CHECK(T.lt(T.one(), T.z()));
  CHECK(T.lt(T.zero(), GroupElem(qq(Rat(1, 9), Rat(8, 9) - 101))));
  CHECK_THROWS_WITH_AS(T.lt(T.zero(), GroupElem(qq(Rat(1, 9), Rat(-100)))),
                       "not a member", std::domain_error);
}

TEST_CASE("wound_round: frozen examples") {
  CyclicGroup a = wound_round(LinearGroupWithZ::z_line(7));
  CHECK(a.kind() == GroupKind::Finite);
  CHECK(a.modulus() == 7);
  CyclicGroup b = wound_round(LinearGroupWithZ::qq_line({qq(Rat(1, 3), Rat(1, 3))}));
  CHECK(b.kind() == GroupKind::QQWound);
  // the quotient satisfies 3x = 1 with a chain through x: x = class (1/3,1/3)
  GroupElem x = qq(Rat(1, 3), Rat(1, 3));
  CHECK(b.eq(b.mul(3, x), b.one()));
  CHECK(chain_R(b, {b.zero(), x, b.mul(2, x)}));
  CyclicGroup c = wound_round(LinearGroupWithZ::z_line(1));
  CHECK(c.modulus() == 1);
}

TEST_CASE("uw_of reports compact carriers that wind back to the start") {
  CyclicGroup G = CyclicGroup::finite(12);
  Unwound u = uw_of(G);
  REQUIRE(u.compact.has_value());
  CHECK(u.compact->z_int() == 12);
  CyclicGroup back = wound_round(*u.compact);
  CHECK(back.modulus() == 12);

  CyclicGroup W = CyclicGroup::qq_wound({qq(Rat(1, 4), Rat(3, 4))});
  Unwound v = uw_of(W);
  REQUIRE(v.compact.has_value());
  CHECK(v.compact->lattice() == W.lattice());
  CHECK(wound_round(*v.compact).lattice() == W.lattice());

  CHECK_FALSE(uw_of(CyclicGroup::linear_z()).compact.has_value());
}

TEST_CASE("winding sums: frozen examples") {
  CyclicGroup G10 = CyclicGroup::finite(10);
  auto [k1, g1] = winding_sum(G10, {Int(6), Int(7)});
  CHECK(k1 == 1);
  CHECK(as_int(g1) == 3);
  auto [k2, g2] = winding_sum(G10, {Int(1), Int(2), Int(3)});
  CHECK(k2 == 0);
  CHECK(as_int(g2) == 6);
  CyclicGroup G4 = CyclicGroup::finite(4);
  auto [k3, g3] = winding_sum(G4, {Int(3), Int(3), Int(3), Int(3)});
  CHECK(k3 == 3);
  CHECK(as_int(g3) == 0);
  auto [k0, g0] = winding_sum(G10, {});
  CHECK(k0 == 0);
  CHECK(as_int(g0) == 0);
}

TEST_CASE("winding sum equals the fold of unwound addition") {
  std::vector<CyclicGroup> groups = {
      CyclicGroup::finite(9), CyclicGroup::finite(1), CyclicGroup::linear_z(),
      CyclicGroup::qq_wound({qq(Rat(1, 2), Rat(1, 2))}),
      CyclicGroup::qq_wound({qq(Rat(1, 6), Rat(0))})};
  for (const CyclicGroup& G : groups) {
    std::vector<GroupElem> es = sample_elements(G, 8);
    // all short tuples over the sample
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = 0; j < es.size(); ++j)
        for (size_t k = 0; k < es.size(); k += 2) {
          std::vector<GroupElem> tuple{es[i], es[j], es[k]};
          UnwoundElem fold{0, G.zero()};
          for (const auto& g : tuple) fold = uw_add(G, fold, {0, g});
          auto [w, val] = winding_sum(G, tuple);
          CHECK(w == fold.winding);
          CHECK(G.eq(val, fold.g));
        }
  }
}

TEST_CASE("winding sum on linear Z counts sign crossings") {
  CyclicGroup Z = CyclicGroup::linear_z();
  auto [k, g] = winding_sum(Z, {Int(-3), Int(5), Int(-1)});
  // two negative terms, positive total: 2 - 0
  CHECK(k == 2);
  CHECK(as_int(g) == 1);
  auto [k2, g2] = winding_sum(Z, {Int(2), Int(-5)});
  CHECK(k2 == 0);  // one negative term, negative total: 1 - 1
  CHECK(as_int(g2) == -3);
}
