#include <doctest.h>

#include <set>

#include "seps/error.hpp"
#include "seps/poset.hpp"
#include "support/structures.hpp"

using namespace seps;
using namespace seps::testing;

namespace {

// Definitional oracle: x is join-irreducible iff non-bottom and every a,b
// with x = a v b has x among {a, b}.
std::vector<int> join_irreducibles_by_definition(const Poset& lat) {
  std::vector<int> out;
  int bot = *lat.bottom();
  for (int x = 0; x < lat.size(); ++x) {
    if (x == bot) continue;
    bool irr = true;
    for (int a = 0; a < lat.size() && irr; ++a)
      for (int b = 0; b < lat.size() && irr; ++b)
        if (lat.join(a, b) == x && a != x && b != x) irr = false;
    if (irr) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("construction rejects non-orders") {
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), Error);  // antisymmetry
  CHECK_NOTHROW(Poset(3, {{0, 1}, {1, 2}}));           // closure supplies (0,2)
  Poset p(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
}

TEST_CASE("diamond is the smallest non-chain lattice") {
  Poset d = diamond();
  CHECK(d.is_lattice());
  CHECK(d.join(1, 2) == 3);
  CHECK(d.meet(1, 2) == 0);
}

TEST_CASE("two-element antichain is not a lattice") {
  Poset a = antichain(2);
  CHECK_FALSE(a.is_lattice());
  BoundResult s = a.supremum(0, 1);
  CHECK_FALSE(s.element.has_value());
  CHECK(s.detail == BoundResult::Detail::NoCommonBound);
}

TEST_CASE("two minimal upper bounds mean no supremum") {
  // bottom 0 < a=1, b=2 < c=3, d=4 < top 5: a,b have minimal upper bounds c,d.
  Poset p(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK_FALSE(p.is_lattice());
  BoundResult s = p.supremum(1, 2);
  CHECK_FALSE(s.element.has_value());
  CHECK(s.detail == BoundResult::Detail::NotUnique);
  // Exhaustive scan: every pair has *some* common upper bound here.
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(p.supremum(a, b).detail != BoundResult::Detail::NoCommonBound);
}

TEST_CASE("comparable pairs bound each other") {
  Poset c = chain(3);
  CHECK(c.supremum(0, 2).element == 2);
  CHECK(c.infimum(0, 2).element == 0);
}

TEST_CASE("join-irreducibles match the definitional oracle") {
  SUBCASE("diamond") {
    Poset d = diamond();
    CHECK(d.join_irreducibles() == std::vector<int>{1, 2});
    CHECK(d.join_irreducibles() == join_irreducibles_by_definition(d));
  }
  SUBCASE("chain") {
    Poset c = chain(3);
    CHECK(c.join_irreducibles() == std::vector<int>{1, 2});
    CHECK(c.join_irreducibles() == join_irreducibles_by_definition(c));
  }
  SUBCASE("singleton lattice has none") {
    Poset one(1, {});
    CHECK(one.join_irreducibles().empty());
  }
  SUBCASE("random lattices") {
    SplitMix rng(21);
    for (int t = 0; t < 50; ++t) {
      Poset lat = random_lattice(rng, 24);
      CHECK(lat.join_irreducibles() == join_irreducibles_by_definition(lat));
    }
  }
}

TEST_CASE("down-set lattices") {
  SUBCASE("2-antichain gives the diamond") {
    DownSetLattice ds = downset_lattice(antichain(2));
    CHECK(ds.lattice.size() == 4);
    CHECK(ds.lattice.is_lattice());
    CHECK(ds.lattice.join_irreducibles().size() == 2);
  }
  SUBCASE("2-chain gives the 3-chain") {
    DownSetLattice ds = downset_lattice(chain(2));
    CHECK(ds.lattice.size() == 3);
    for (int i = 0; i + 1 < 3; ++i) CHECK(ds.lattice.leq(i, i + 1));
  }
  SUBCASE("3-antichain gives the Boolean lattice on 3 atoms") {
    DownSetLattice ds = downset_lattice(antichain(3));
    CHECK(ds.lattice.size() == 8);
    CHECK(ds.lattice.is_distributive());
  }
  SUBCASE("size guard") {
    CHECK_THROWS_AS(downset_lattice(antichain(8), 100), Error);
  }
}

TEST_CASE("distributivity") {
  SplitMix rng(3);
  CHECK(downset_lattice(random_poset(rng, 4)).lattice.is_distributive());
  CHECK_FALSE(m3().is_distributive());
  CHECK_FALSE(n5().is_distributive());
  CHECK(chain(5).is_distributive());
  CHECK_THROWS_AS(antichain(2).is_distributive(), Error);
}

TEST_CASE("down-set lattices of random posets are always distributive") {
  SplitMix rng(5);
  for (int t = 0; t < 30; ++t) {
    Poset p = random_poset(rng, rng.range(1, 5));
    CHECK(downset_lattice(p).lattice.is_distributive());
  }
}

TEST_CASE("absorption holds in random lattices") {
  SplitMix rng(9);
  for (int t = 0; t < 30; ++t) {
    Poset lat = random_lattice(rng, 20);
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b)
        CHECK(lat.meet(a, lat.join(a, b)) == a);
  }
}

TEST_CASE("Birkhoff counting sanity: |O(J(L))| == |L| for distributive L") {
  SplitMix rng(13);
  for (int t = 0; t < 25; ++t) {
    Poset p = random_poset(rng, rng.range(1, 5));
    DownSetLattice ds = downset_lattice(p);
    IrreduciblePoset j = join_irreducible_poset(ds.lattice);
    CHECK(int(all_down_sets(j.poset, ds.lattice.size() + 1).size()) == ds.lattice.size());
  }
}

TEST_CASE("induced sub-posets and duals") {
  Poset d = diamond();
  Poset mid = d.induced({1, 2});
  CHECK(mid.size() == 2);
  CHECK(mid.incomparable(0, 1));
  Poset dd = d.dual();
  CHECK(dd.leq(3, 0));
  CHECK(dd.is_lattice());
}

TEST_CASE("minimal and maximal elements, covers") {
  Poset d = diamond();
  Bitset all = Bitset::full(4);
  CHECK(d.minimal_elements(all) == std::vector<int>{0});
  CHECK(d.maximal_elements(all) == std::vector<int>{3});
  CHECK(d.lower_covers(3) == std::vector<int>{1, 2});
  CHECK(d.upper_covers(0) == std::vector<int>{1, 2});
  CHECK(d.bottom() == 0);
  CHECK(d.top() == 3);
}
