#include "seps/fixtures.hpp"

namespace seps {

BipartitionFixture submodular_not_order_induced_fixture() {
  BipartitionFixture f{bipartition_universe({"a", "b", "c", "d", "e", "f"}), Bitset()};
  f.members = Bitset(f.universe.uni.size());
  // Oriented sides of the ten unoriented separations (bit 0 = a, ..., 5 = f):
  // {}|{a..f}, {b}, {d}, {f}, {a,b}, {c,d}, {e,f}, {a,b,c}, {a,b,f}, {a,e,f}.
  for (uint32_t side : {0u, 2u, 8u, 32u, 3u, 12u, 48u, 7u, 35u, 49u}) {
    f.members.set(f.universe.element_of_mask(side));
    f.members.set(f.universe.complement_element(f.universe.element_of_mask(side)));
  }
  return f;
}

std::vector<int> BipartitionFixture::known_cycle() const {
  // ({a,b,c,d},{e,f}) -> ({a,b},..) -> ({a,b,e,f},..) -> ({e,f},..)
  //   -> ({c,d,e,f},..) -> ({c,d},..) -> back.
  return {15, 3, 51, 48, 60, 12};
}

}  // namespace seps
