#pragma once

// Built-in example: the separation system on six points that is submodular in
// its bipartition universe but not order-induced there. Used by the CLI demo
// and the test suites.

#include "seps/sepsys.hpp"

namespace seps {

struct BipartitionFixture {
  BipartitionUniverse universe;  // B({a,...,f})
  Bitset members;                // the 20 orientations of the 10 separations

  // The directed cycle in the dependency digraph witnessing the obstruction,
  // as universe element indices.
  std::vector<int> known_cycle() const;
};

BipartitionFixture submodular_not_order_induced_fixture();

}  // namespace seps
