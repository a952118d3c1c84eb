#pragma once

// Submodular function constructions: extension from an interval, functions
// vanishing exactly on a dense sublattice, threshold functions for arbitrary
// sublattices of distributive lattices, and the symmetric universe variants.

#include <vector>

#include "seps/poset.hpp"
#include "seps/rational.hpp"
#include "seps/sepsys.hpp"

namespace seps {

using Valuation = std::vector<Rat>;  // one value per lattice element

// The partition of L induced by an interval [x,y], with the chain levels the
// extension formula is built from: dl is defined on {z : z <= y} with
// dl(bottom) = 0 and dl(z) = max dl(z') + 1 over z' < z; ul dually from the
// top on {z : z >= x}. Undefined levels are -1.
struct LevelledPartition {
  int x = -1, y = -1;
  Bitset interval, below, above, beside;
  std::vector<int> dl, ul;
  int max_level = 0;
  Rat scale;  // M = 2^max_level * max(k, 1)
};

LevelledPartition levelled_partition(const Poset& lattice, int x, int y, const Rat& k);

// Extends a submodular f on [x,y] to a submodular g on all of L with
// g == f on the interval and g > max(f) everywhere else:
//   g(z) = M(2 - 2^{-dl(z)}) below, M(2 - 2^{-ul(z)}) above, 4M beside.
// Only the interval entries of `f` are read. The result is re-verified
// (submodular everywhere, agrees inside, exceeds max(f) outside).
Valuation extend_from_interval(const Poset& lattice, int x, int y, const Valuation& f);

// f(Y) = sum over p in Y of |X_p \ Y| where X_p is the least member of the
// sublattice containing p. Requires bottom and top of O(P) to lie in `members`
// (MissingTopOrBottom) and `members` to be union/intersection-closed
// (NotASublattice). Vanishes exactly on `members`.
Valuation dense_sublattice_function(const DownSetLattice& op, const Bitset& members);

struct ThresholdFunction {
  Valuation values;
  Rat threshold;
};

// For a sublattice Lp of a distributive lattice L: a submodular f with
// f^{-1}([0,k]) = Lp, built by the dense construction on the interval
// [bottom(Lp), top(Lp)] in Birkhoff coordinates, then interval extension;
// k = 1/2 separates the integer-valued construction cleanly.
ThresholdFunction sublattice_function(const Poset& lattice, const Bitset& sublattice);

// Symmetric variant for a subuniverse of a distributive universe: the
// sublattice function symmetrized by s -> f(s) + f(s*), threshold doubled.
ThresholdFunction subuniverse_order_function(const Universe& u, const Bitset& subuniverse);

// Extends a symmetric submodular f on the symmetric interval [x, x*] to a
// symmetric submodular g on all of U via the plain extension followed by the
// mean symmetrization; g > max(f) outside the interval.
Valuation extend_order_function_from_symmetric_interval(const Universe& u, int x,
                                                        const Valuation& f);

}  // namespace seps
