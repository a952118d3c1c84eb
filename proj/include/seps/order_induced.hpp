#pragma once

// Exact decision procedure for order-induced submodularity. Membership in P
// must coincide with {a : f(a) < k} for a submodular (order) function f; with
// the normalization k = 1 this is a strict-inequality feasibility question,
// decided by maximizing the separation slack: P is order-induced iff the
// optimum is positive.

#include <optional>
#include <string>
#include <vector>

#include "seps/poset.hpp"
#include "seps/rational.hpp"
#include "seps/sepsys.hpp"

namespace seps {

struct InducedWitness {
  std::vector<Rat> values;  // f, one value per lattice element, nonnegative
  Rat threshold;            // k > 0
  bool symmetric = false;   // f(s) = f(s*) was enforced
};

struct OrderInducedResult {
  std::optional<InducedWitness> witness;  // empty: not order-induced
  bool order_induced() const { return witness.has_value(); }
};

// Decide order-induced submodularity of `subset` in `lattice`. With
// `symmetric` set, `inv` must point to a valid order-reversing involution and
// the subset must be involution-closed; the witness is then an order function.
OrderInducedResult find_inducing_function(const Poset& lattice, const Bitset& subset,
                                          bool symmetric = false,
                                          const std::vector<int>* inv = nullptr);

struct WitnessCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Independent exhaustive re-check of every witness invariant: nonnegativity,
// submodularity over all pairs, strict separation at the threshold, symmetry.
WitnessCheck verify_witness(const Poset& lattice, const Bitset& subset,
                            const InducedWitness& w,
                            const std::vector<int>* inv = nullptr);

// First submodularity violation f(a v b) + f(a ^ b) > f(a) + f(b), if any.
std::optional<std::pair<int, int>> find_submodularity_violation(const Poset& lattice,
                                                                const std::vector<Rat>& f);

// g(s) = f(s) + f(s*), resp. (f(s) + f(s*)) / 2: symmetric submodular
// valuations from a submodular input (throws InputNotSubmodular).
std::vector<Rat> symmetrize_sum(const Universe& u, const std::vector<Rat>& f);
std::vector<Rat> symmetrize_mean(const Universe& u, const std::vector<Rat>& f);

}  // namespace seps
