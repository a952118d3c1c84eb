#pragma once

// Decomposition of separation systems that are submodular in a distributive
// universe: covering by three proper corner-closed subsystems, the disjoint
// variant via recursion in Birkhoff coordinates (with the bipartition case as
// the base), and the partition into bipartition-embeddable classes of equal
// s ^ s*.

#include <optional>
#include <vector>

#include "seps/sepsys.hpp"

namespace seps {

struct Decomposition {
  Bitset whole;               // S
  std::vector<Bitset> parts;  // subsystem masks over the host universe
  bool disjoint = false;
  bool covering = false;
  bool each_proper = false;
  bool each_corner_closed = false;
};

struct CornerFaithfulEmbedding {
  Bitset source_members;       // over the host universe
  BipartitionUniverse target;
  std::vector<int> map;        // host element -> target element, -1 outside
};

// Everything the structures promise, re-checked exhaustively against the
// host: flags of a decomposition, injectivity/order/involution/corner
// faithfulness of an embedding.
Report verify_decomposition(const Universe& u, const Bitset& s, const Decomposition& d);
Report verify_embedding(const Universe& u, const CornerFaithfulEmbedding& e);

// Three-part covering in a bipartition universe: pick ground points x, y, z
// from two suitably oriented member separations (least-index choices
// throughout) and take the members not separating each pair. Covering, proper
// and corner-closed; disjointness is whatever it happens to be and is
// reported in the flag.
Decomposition decompose_bipartition(const BipartitionUniverse& u, const Bitset& s);

struct DistributiveDecomposition {
  std::optional<Decomposition> triple;
  std::optional<CornerFaithfulEmbedding> embedding;
};

// Disjoint triple of corner-closed parts, or a corner-faithful embedding of S
// into a bipartition universe when the recursion bottoms out there. With
// `force_triple`, the bipartition case is decomposed further (parts then
// need not be disjoint).
DistributiveDecomposition decompose_distributive(const Universe& u, const Bitset& s,
                                                 bool force_triple = false,
                                                 int max_elements = kDefaultMaxElements);

struct ClassDecomposition {
  Decomposition decomposition;                    // disjoint partition of S
  std::vector<Bitset> signatures;                 // s ^ s* per part, as J-masks
  std::vector<CornerFaithfulEmbedding> embeddings;  // one per part
};

// Partition of S into the equivalence classes of s ^ s* (computed in Birkhoff
// coordinates), each corner-closed and corner-faithfully embedded into a
// bipartition universe over the orbits of the unused irreducibles.
ClassDecomposition decompose_into_classes(const Universe& u, const Bitset& s,
                                          int max_elements = kDefaultMaxElements);

}  // namespace seps
