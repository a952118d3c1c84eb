#pragma once

// Finite posets and lattices. The order is kept as a full transitive truth
// table (one Bitset row per element in each direction), so comparability,
// bounds and covers are cheap; inputs may supply covers or any generating
// relation, which is transitively closed and then validated.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seps/bitset.hpp"

namespace seps {

// Outcome of a supremum/infimum query. A poset can fail to have a least
// upper bound in two ways, and the reports downstream distinguish them.
struct BoundResult {
  enum class Detail { Found, NoCommonBound, NotUnique };
  std::optional<int> element;
  Detail detail = Detail::NoCommonBound;
};

class Poset {
 public:
  Poset() = default;  // the empty poset; placeholder for late-filled members

  // `relation` lists pairs (a, b) meaning a <= b; reflexive pairs implied.
  // Throws Error(InvalidPoset) if the transitive closure is not antisymmetric.
  Poset(int n, const std::vector<std::pair<int, int>>& relation,
        std::vector<std::string> labels = {});

  // Order given directly as up-set rows ({b : a <= b} for each a). Must
  // already be reflexive and transitive; validated. An empty row vector is
  // allowed: the empty poset serves as the carrier of induced sub-posets
  // (e.g. the join-irreducibles of a one-element lattice).
  explicit Poset(std::vector<Bitset> up_rows, std::vector<std::string> labels = {});

  // Order plus externally computed lattice tables (builders that know their
  // joins/meets structurally, e.g. inclusion orders on closed families).
  // Tables are spot-checked, and fully verified at small sizes.
  Poset(std::vector<Bitset> up_rows, std::vector<std::string> labels,
        std::vector<int32_t> join_table, std::vector<int32_t> meet_table);

  int size() const { return n_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& s) const;  // -1 if unknown

  bool leq(int a, int b) const { return up_[a].test(b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }
  const Bitset& up_set(int a) const { return up_[a]; }
  const Bitset& down_set(int a) const { return down_[a]; }

  BoundResult supremum(int a, int b) const;
  BoundResult infimum(int a, int b) const;

  bool is_lattice() const { return lattice_; }
  // Join/meet table lookups; throw Error(NotALattice) when not a lattice.
  int join(int a, int b) const;
  int meet(int a, int b) const;

  std::optional<int> bottom() const;
  std::optional<int> top() const;

  std::vector<int> lower_covers(int a) const;
  std::vector<int> upper_covers(int a) const;

  // Non-bottom elements with exactly one lower cover, in index order.
  // Requires a lattice (throws NotALattice).
  std::vector<int> join_irreducibles() const;

  // Both distributive laws over all triples. Requires a lattice.
  bool is_distributive() const;

  // Sub-poset induced on `elems` (new index = position in `elems`).
  Poset induced(const std::vector<int>& elems) const;
  Poset dual() const;

  // Minimal elements of `subset` within this poset.
  std::vector<int> minimal_elements(const Bitset& subset) const;
  std::vector<int> maximal_elements(const Bitset& subset) const;

 private:
  void finish_construction(bool skip_tables = false);
  void compute_tables();
  void verify_preset_tables() const;

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Bitset> up_, down_;
  std::vector<int> topo_;  // a linear extension, used by bound searches
  bool lattice_ = false;
  std::vector<int32_t> join_table_, meet_table_;  // n*n, only when lattice_
};

// Ordered sub-poset of join-irreducibles, together with their indices in L.
struct IrreduciblePoset {
  std::vector<int> elements;  // indices into the source lattice
  Poset poset;
};
IrreduciblePoset join_irreducible_poset(const Poset& lattice);

// Is `members` down-closed in p?
bool is_down_closed(const Poset& p, const Bitset& members);

// All down-closed subsets, in deterministic (numeric mask) order. Throws
// Error(SizeLimitExceeded) if more than `max_size` are found.
std::vector<Bitset> all_down_sets(const Poset& p, int max_size);

// The lattice O(P) of down-closed subsets ordered by inclusion, with
// join = union and meet = intersection. masks[i] is the down-set of element i.
struct DownSetLattice {
  Poset lattice;
  std::vector<Bitset> masks;
  int index_of(const Bitset& mask) const;  // -1 if absent
};
DownSetLattice downset_lattice(const Poset& p, int max_size = 1 << 20);

// Inclusion order on a family of masks, which must be sorted (numeric order)
// and duplicate-free. If `union_intersection_tables` is set the family must be
// closed under & and |, and the lattice tables are built by direct mask lookup
// instead of bound search.
Poset inclusion_poset(const std::vector<Bitset>& masks, std::vector<std::string> labels,
                      bool union_intersection_tables);

inline constexpr int kDefaultMaxElements = 4096;

}  // namespace seps
