#include <doctest.h>

#include "seps/error.hpp"
#include "seps/sepsys.hpp"
#include "seps/submodularity.hpp"
#include "support/structures.hpp"

using namespace seps;
using namespace seps::testing;

TEST_CASE("validation of systems and universes") {
  SUBCASE("diamond with the order-reversing pairing is a valid universe") {
    Universe u = diamond_universe();
    CHECK(u.validate().ok());
  }
  SUBCASE("identity involution on the diamond is not order-reversing") {
    SepSystem s(diamond(), {0, 1, 2, 3});
    Report r = s.validate();
    CHECK_FALSE(r.ok());
    CHECK(r.problems.front().find("order-reversing") != std::string::npos);
  }
  SUBCASE("2-antichain with swap is a valid system but no universe") {
    SepSystem s(antichain(2), {1, 0});
    CHECK(s.validate().ok());
    CHECK_FALSE(s.poset().is_lattice());
    CHECK_THROWS_AS(Universe{s}, Error);
  }
  SUBCASE("involution must be a permutation of the right size") {
    CHECK_THROWS_AS(SepSystem(antichain(2), {0, 0}), Error);
    CHECK_THROWS_AS(SepSystem(antichain(2), {0}), Error);
  }
  SUBCASE("systems are non-empty") {
    CHECK_THROWS_AS(Poset(0, {}), Error);
    CHECK_THROWS_AS(SepSystem(Poset(std::vector<Bitset>{}), {}), Error);
  }
}

TEST_CASE("bipartition universes") {
  SUBCASE("|V| = 1 gives the two mutually inverse orientations") {
    BipartitionUniverse b = bipartition_universe({"v"});
    CHECK(b.uni.size() == 2);
    CHECK(b.uni.inv(0) == 1);
    CHECK(b.uni.inv(1) == 0);
    CHECK(b.uni.validate().ok());
  }
  SUBCASE("|V| = 2 is the diamond universe") {
    BipartitionUniverse b = bipartition_universe({"v", "w"});
    CHECK(b.uni.size() == 4);
    CHECK(b.uni.validate().ok());
    CHECK(b.uni.poset().is_distributive());
    CHECK(b.uni.inv(0) == 3);
    CHECK(b.uni.inv(1) == 2);
  }
  SUBCASE("|V| = 6 carries 64 oriented separations") {
    BipartitionUniverse b = bipartition_universe({"a", "b", "c", "d", "e", "f"});
    CHECK(b.uni.size() == 64);
    CHECK(b.uni.validate().ok());
  }
  SUBCASE("size guard") {
    CHECK_THROWS_AS(bipartition_universe({"a", "b", "c"}, 4), Error);
  }
}

TEST_CASE("set separation universes") {
  SUBCASE("|V| = 1 has the three pairs over {v}") {
    SetSeparationUniverse s = set_separation_universe({"v"});
    CHECK(s.uni.size() == 3);
    CHECK(s.uni.validate().ok());
  }
  SUBCASE("|V| = 2 has nine elements with B(V) embedded as a subuniverse") {
    SetSeparationUniverse s = set_separation_universe({"v", "w"});
    CHECK(s.uni.size() == 9);
    CHECK(s.uni.validate().ok());
    Bitset bip = s.embedded_bipartitions();
    CHECK(bip.count() == 4);
    // Closed under involution, joins and meets.
    for (int a = bip.first(); a >= 0; a = bip.next(a)) {
      CHECK(bip.test(s.uni.inv(a)));
      for (int b = bip.first(); b >= 0; b = bip.next(b)) {
        CHECK(bip.test(s.uni.join(a, b)));
        CHECK(bip.test(s.uni.meet(a, b)));
      }
    }
  }
  SUBCASE("componentwise join formula") {
    SetSeparationUniverse s = set_separation_universe({"1", "2"});
    int ab = s.index_of_sides(0b01, 0b11);  // ({1},{1,2})
    int cd = s.index_of_sides(0b10, 0b11);  // ({2},{1,2})
    REQUIRE(ab >= 0);
    REQUIRE(cd >= 0);
    int join = s.uni.join(ab, cd);
    CHECK(s.sides[join] == std::make_pair(uint32_t(0b11), uint32_t(0b11)));
  }
}

TEST_CASE("corners") {
  SUBCASE("diamond: all four corners of the two middles") {
    Universe u = diamond_universe();
    auto c = u.corners(1, 2);  // r = a, s = b = a*
    CHECK(c[0] == 3);          // a v b = top
    CHECK(c[1] == 2);          // a* v b = b
    CHECK(c[2] == 1);          // a v b* = a
    CHECK(c[3] == 3);          // a* v b* = top
  }
  SUBCASE("bipartition corners are unions of sides") {
    BipartitionUniverse b = bipartition_universe({"1", "2"});
    int r = b.element_of_mask(0b01), s = b.element_of_mask(0b10);
    auto c = b.uni.corners(r, s);
    CHECK(b.mask_of(c[0]) == 0b11);  // r v s
    CHECK(b.mask_of(c[1]) == 0b10);  // r* v s = s
    CHECK(b.mask_of(c[2]) == 0b01);  // r v s* = r
    CHECK(b.mask_of(c[3]) == 0b11);  // r* v s* = s v r, i.e. (r ^ s)*
  }
  SUBCASE("corners of r with itself") {
    Universe u = diamond_universe();
    for (int r = 0; r < u.size(); ++r) {
      auto c = u.corners(r, r);
      CHECK(c[0] == r);
      CHECK(c[1] == u.join(u.inv(r), r));
      CHECK(c[2] == u.join(r, u.inv(r)));
      CHECK(c[3] == u.inv(r));
    }
  }
}

TEST_CASE("De Morgan holds in every valid universe") {
  SplitMix rng(41);
  for (int t = 0; t < 20; ++t) {
    Universe u = double_universe(random_lattice(rng, 10));
    for (int a = 0; a < u.size(); ++a)
      for (int b = 0; b < u.size(); ++b) {
        CHECK(u.inv(u.join(a, b)) == u.meet(u.inv(a), u.inv(b)));
        CHECK(u.inv(u.meet(a, b)) == u.join(u.inv(a), u.inv(b)));
      }
  }
}

TEST_CASE("doubling") {
  SUBCASE("singleton lattice doubles to the 2-chain universe") {
    Universe u = double_universe(Poset(1, {}));
    CHECK(u.size() == 2);
    CHECK(u.validate().ok());
    CHECK(u.poset().leq(0, 1));
    CHECK(u.inv(0) == 1);
  }
  SUBCASE("2-chain doubles to the 4-chain universe") {
    Universe u = double_universe(chain(2));
    CHECK(u.size() == 4);
    CHECK(u.validate().ok());
    CHECK(u.poset().leq(0, 1));
    CHECK(u.poset().leq(1, 3));  // 3 = upper copy of element 1
    CHECK(u.poset().leq(3, 2));
    CHECK(u.poset().top() == 2);
  }
  SUBCASE("doubled diamond: every separation small or co-small") {
    Universe u = double_universe(diamond());
    CHECK(u.size() == 8);
    CHECK(u.validate().ok());
    for (int s = 0; s < u.size(); ++s)
      CHECK((u.poset().leq(s, u.inv(s)) || u.poset().leq(u.inv(s), s)));
  }
  SUBCASE("inclusion of L preserves joins and meets") {
    SplitMix rng(31);
    for (int t = 0; t < 20; ++t) {
      Poset lat = random_lattice(rng, 12);
      Universe u = double_universe(lat);
      REQUIRE(u.validate().ok());
      for (int a = 0; a < lat.size(); ++a)
        for (int b = 0; b < lat.size(); ++b) {
          CHECK(u.join(a, b) == lat.join(a, b));
          CHECK(u.meet(a, b) == lat.meet(a, b));
        }
    }
  }
  SUBCASE("doubling rejects non-lattices") {
    CHECK_THROWS_AS(double_universe(antichain(2)), Error);
  }
}

TEST_CASE("lifting subsets to the double") {
  Poset lat = diamond();
  SUBCASE("empty and full lifts") {
    CHECK(lift_subset_to_double(lat, Bitset(4)).none());
    CHECK(lift_subset_to_double(lat, Bitset::full(4)).count() == 8);
  }
  SUBCASE("lift is involution-closed") {
    Universe u = double_universe(lat);
    Bitset p = Bitset::of(4, {0, 1});
    Bitset lifted = lift_subset_to_double(lat, p);
    CHECK(validate_subsystem(u.system(), lifted).ok());
  }
  SUBCASE("submodular P lifts to a submodular subsystem of the double") {
    SplitMix rng(37);
    for (int t = 0; t < 25; ++t) {
      Poset lat2 = random_lattice(rng, 12);
      Bitset p = random_submodular_subset(rng, lat2);
      Universe u = double_universe(lat2);
      CHECK(is_submodular_in(u.poset(), lift_subset_to_double(lat2, p)).ok);
    }
  }
}

TEST_CASE("B(V) is a subuniverse of the set separation universe") {
  for (int v = 1; v <= 3; ++v) {
    std::vector<std::string> ground;
    for (int i = 0; i < v; ++i) ground.push_back(std::string(1, char('a' + i)));
    SetSeparationUniverse s = set_separation_universe(ground);
    BipartitionUniverse b = bipartition_universe(ground);
    uint32_t full = (uint32_t(1) << v) - 1;
    // The inclusion (A, V \ A) -> (A, V \ A) preserves order, involution,
    // joins and meets.
    for (uint32_t a = 0; a <= full; ++a) {
      int ia = s.index_of_sides(a, full & ~a);
      REQUIRE(ia >= 0);
      CHECK(s.uni.inv(ia) == s.index_of_sides(full & ~a, a));
      for (uint32_t c = 0; c <= full; ++c) {
        int ic = s.index_of_sides(c, full & ~c);
        int want_join = s.index_of_sides(a | c, (full & ~a) & (full & ~c));
        CHECK(s.uni.join(ia, ic) == want_join);
        CHECK(b.uni.poset().leq(int(a), int(c)) == s.uni.poset().leq(ia, ic));
      }
    }
  }
}
