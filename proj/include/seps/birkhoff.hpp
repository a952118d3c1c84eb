#pragma once

// Birkhoff representation: a distributive lattice is isomorphic to the
// down-set lattice of its join-irreducibles, and a distributive universe
// additionally induces an order-reversing involution ' on the irreducibles
// with X^* = P \ X' at the down-set level.

#include <map>
#include <vector>

#include "seps/sepsys.hpp"

namespace seps {

struct BirkhoffRep {
  std::vector<int> irreducibles;  // source indices of J(L), ascending
  Poset jposet;                   // induced order on the irreducibles
  std::vector<int> jinv;          // involution ' on jposet; empty for plain lattices
  std::vector<Bitset> eta;        // per source element a: {k : irr[k] <= a}

  // eta^{-1}: source element whose image is `downset`, or -1.
  int element_of(const Bitset& downset) const;

  std::map<Bitset, int> eta_inv;  // filled by the constructors below
};

// Requires a distributive lattice; the isomorphism property (order, joins to
// unions, meets to intersections, bijectivity onto the down-sets) is verified
// on all pairs before returning.
BirkhoffRep birkhoff(const Poset& lattice);

struct InvPosetUniverse {
  Universe uni;
  std::vector<Bitset> masks;  // down-set of each universe element, over P
  int index_of(const Bitset& mask) const;
};

// (O(P), X -> P \ X') for an involution poset P; always a distributive
// universe, validated before returning.
InvPosetUniverse universe_from_involution_poset(const SepSystem& p,
                                                int max_elements = kDefaultMaxElements);

// Birkhoff representation of a distributive universe: computes the induced
// involution on the irreducibles (x' is the unique element of
// (down(x) - x)^* \ down(x)^*), then verifies that ' is an order-reversing
// involution, that X^* = P \ X' for every down-set, the counting identity
// |X^*| = |P| - |X|, and down(x)^* = P \ up(x') for every x.
BirkhoffRep birkhoff_universe(const Universe& u);

}  // namespace seps
