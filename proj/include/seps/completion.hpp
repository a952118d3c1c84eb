#pragma once

// Dedekind-MacNeille completion of a separation system into a universe. The
// cut lattice {X : X^{ul} = X} is built as the intersection closure of the
// principal ideals (plus the full set), and carries the involution
// X -> X^{u*}, which makes the canonical embedding s -> {s}^l an isomorphism
// of separation systems onto its image.

#include <vector>

#include "seps/sepsys.hpp"

namespace seps {

// {p : p >= x for all x in X}, resp. lower bounds; the empty set is bounded
// by everything.
Bitset upper_bounds(const Poset& p, const Bitset& x);
Bitset lower_bounds(const Poset& p, const Bitset& x);

struct DMCompletion {
  SepSystem source;
  Universe universe;
  std::vector<Bitset> cuts;    // per universe element: the cut X c= source
  std::vector<int> embedding;  // source element s -> index of {s}^l

  int index_of_cut(const Bitset& mask) const;  // -1 if absent
  // Image of the source as a subsystem mask of the completion.
  Bitset embedded_members() const;
};

DMCompletion dm_complete(const SepSystem& s, int max_elements = kDefaultMaxElements);

// Re-checks everything the construction promises: every element is a closed
// cut, the involution maps into the completion and is an order-reversing
// involution, the embedding commutes with the involutions, the completion is
// a universe, and the embedding preserves exactly the pre-existing binary
// suprema and infima (both directions of the iff).
Report verify_dm(const DMCompletion& c);

}  // namespace seps
