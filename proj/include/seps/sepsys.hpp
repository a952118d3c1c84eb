#pragma once

// Separation systems (posets with an order-reversing involution), universes
// (systems whose poset is a lattice), and the canonical constructions on
// them: bipartition universes, set-separation universes, doubling.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "seps/poset.hpp"

namespace seps {

struct Report {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  void add(std::string p) { problems.push_back(std::move(p)); }
  std::string to_string() const;
};

class SepSystem {
 public:
  // `inv` is the involution as an element permutation. Shape (sizes, being a
  // permutation) is enforced here; the order-theoretic laws are what
  // validate() reports on.
  SepSystem(Poset poset, std::vector<int> inv);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int inv(int s) const { return inv_[s]; }
  const std::vector<int>& involution() const { return inv_; }

  // Involution law and order reversal, checked exhaustively.
  Report validate() const;

  int orbit_rep(int s) const { return s <= inv_[s] ? s : inv_[s]; }
  // One representative per unoriented separation, ascending.
  std::vector<int> orbit_reps() const;
  // Image of a set under the involution.
  Bitset image(const Bitset& members) const;

 private:
  Poset poset_;
  std::vector<int> inv_;
};

class Universe {
 public:
  // Requires the underlying poset to be a lattice (throws NotALattice).
  explicit Universe(SepSystem sys);

  const SepSystem& system() const { return sys_; }
  const Poset& poset() const { return sys_.poset(); }
  int size() const { return sys_.size(); }
  int inv(int s) const { return sys_.inv(s); }
  int join(int a, int b) const { return poset().join(a, b); }
  int meet(int a, int b) const { return poset().meet(a, b); }

  // System laws plus the lattice property and both De Morgan identities.
  Report validate() const;

  // The corners of r and s: (r v s, r* v s, r v s*, r* v s*).
  std::array<int, 4> corners(int r, int s) const;

 private:
  SepSystem sys_;
};

// Is `members` closed under the involution of `sys`?
Report validate_subsystem(const SepSystem& sys, const Bitset& members);

// All oriented bipartitions of a ground set, ordered by inclusion of the
// oriented side; element index == side mask as an integer.
struct BipartitionUniverse {
  std::vector<std::string> ground;
  Universe uni;

  int element_of_mask(uint32_t mask) const { return int(mask); }
  uint32_t mask_of(int element) const { return uint32_t(element); }
  int complement_element(int element) const {
    return int(~mask_of(element) & ((uint32_t(1) << ground.size()) - 1));
  }
};

BipartitionUniverse bipartition_universe(std::vector<std::string> ground,
                                         int max_elements = kDefaultMaxElements);
// Label of the oriented side A of a bipartition, e.g. "{a,b}".
std::string side_label(uint32_t mask, const std::vector<std::string>& ground);

// All ordered pairs (A,B) with A u B = V; join/meet componentwise,
// involution swaps the pair. Contains B(V) as a subuniverse.
struct SetSeparationUniverse {
  std::vector<std::string> ground;
  Universe uni;
  std::vector<std::pair<uint32_t, uint32_t>> sides;  // (A,B) per element
  int index_of_sides(uint32_t a, uint32_t b) const;  // -1 if not present
  // Elements forming the embedded bipartition universe (A, V \ A).
  Bitset embedded_bipartitions() const;
};

SetSeparationUniverse set_separation_universe(std::vector<std::string> ground,
                                              int max_elements = kDefaultMaxElements);

// The universe on L u L' where L' is an order-reversed copy above all of L
// and the involution swaps the copies. Element i is the lower copy of i,
// element n+i the upper copy.
Universe double_universe(const Poset& lattice);
// P u P' as a subsystem mask of double_universe(L).
Bitset lift_subset_to_double(const Poset& lattice, const Bitset& subset);

}  // namespace seps
