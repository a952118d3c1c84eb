#pragma once

// Structural submodularity predicates and the dependency digraph whose
// directed cycles obstruct order-induced submodularity.

#include <optional>
#include <string>
#include <vector>

#include "seps/sepsys.hpp"

namespace seps {

struct SubmodularityCheck {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  // pairs with neither bound usable
};

// For all a,b in members: the supremum of a,b taken in `host` exists and lies
// in members, or the infimum does. (The two bound queries use the host order;
// membership is what is tested against `members`.)
SubmodularityCheck is_submodular_in(const Poset& host, const Bitset& members);

// members == the whole poset: every pair has a supremum or infimum in p.
bool is_submodular(const Poset& p);

// inner c= outer c= U. True iff every join of two inner elements that lies in
// outer lies in inner. By involution closure of both sets this covers meets.
bool is_corner_closed(const Universe& u, const Bitset& inner, const Bitset& outer);

struct DepEdge {
  enum class Kind { Inner, Outer, Crossing };
  int tail = -1, head = -1;
  Kind kind = Kind::Crossing;
  int witness = -1;      // least such c, -1 for crossing edges
  bool via_join = false; // head == tail v witness (else head == tail ^ witness)
};

struct DependencyDigraph {
  int n = 0;
  Bitset subset;                       // P
  std::vector<DepEdge> edges;          // sorted by (tail, head)
  std::vector<std::vector<int>> succ;  // sorted successor lists

  bool has_edge(int a, int b) const;
  const DepEdge* edge(int a, int b) const;
};

// The digraph D = (L, E): crossing edges from every non-member to every
// member, plus witnessed edges between two members / two non-members.
DependencyDigraph dependency_digraph(const Poset& lattice, const Bitset& subset);

// Deterministic cycle search: the cycle starting at the least vertex lying on
// any cycle, following least successors (with backtracking). Returns the
// vertex sequence v0 -> v1 -> ... -> vk-1 -> v0, or nullopt if acyclic.
std::optional<std::vector<int>> find_cycle(const DependencyDigraph& d);

// DOT rendering: inner edges solid, outer dashed, crossing dotted; edges of
// `cycle` (if given) highlighted.
std::string depgraph_dot(const DependencyDigraph& d, const Poset& lattice,
                         const std::vector<int>* cycle = nullptr);

}  // namespace seps
