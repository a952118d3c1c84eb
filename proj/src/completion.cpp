#include "seps/completion.hpp"

#include <algorithm>
#include <set>

#include "seps/error.hpp"

namespace seps {

Bitset upper_bounds(const Poset& p, const Bitset& x) {
  Bitset out = Bitset::full(p.size());
  for (int a = x.first(); a >= 0; a = x.next(a)) out &= p.up_set(a);
  return out;
}

Bitset lower_bounds(const Poset& p, const Bitset& x) {
  Bitset out = Bitset::full(p.size());
  for (int a = x.first(); a >= 0; a = x.next(a)) out &= p.down_set(a);
  return out;
}

int DMCompletion::index_of_cut(const Bitset& mask) const {
  auto it = std::lower_bound(cuts.begin(), cuts.end(), mask);
  if (it != cuts.end() && *it == mask) return int(it - cuts.begin());
  return -1;
}

Bitset DMCompletion::embedded_members() const {
  Bitset out(universe.size());
  for (int idx : embedding) out.set(idx);
  return out;
}

DMCompletion dm_complete(const SepSystem& s, int max_elements) {
  Report valid = s.validate();
  if (!valid.ok())
    throw Error(ErrorKind::InvalidInvolutionPoset, valid.problems.front());
  const Poset& p = s.poset();
  int n = p.size();

  // X^{ul} equals the intersection of the principal ideals of X's upper
  // bounds, so the closed cuts are exactly the intersections of principal
  // ideals, together with the whole set for the empty intersection. One pass
  // accumulating intersections builds the family.
  std::set<Bitset> family;
  family.insert(Bitset::full(n));
  for (int q = 0; q < n; ++q) {
    std::vector<Bitset> grown;
    for (const Bitset& x : family) grown.push_back(x & p.down_set(q));
    family.insert(grown.begin(), grown.end());
    if (int(family.size()) > max_elements)
      throw Error(ErrorKind::SizeLimitExceeded, "completion exceeds the element bound");
  }

  std::vector<Bitset> cuts(family.begin(), family.end());
  std::sort(cuts.begin(), cuts.end());
  int m = int(cuts.size());

  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string lab = "{";
    bool first = true;
    for (int a = cuts[i].first(); a >= 0; a = cuts[i].next(a)) {
      if (!first) lab += ",";
      lab += p.label(a);
      first = false;
    }
    labels[i] = lab + "}";
  }

  // The family is intersection-closed but not union-closed; joins need the
  // generic bound search.
  Poset lattice = inclusion_poset(cuts, std::move(labels), false);
  if (!lattice.is_lattice())
    throw Error(ErrorKind::InternalContradiction, "completion is not a lattice");

  auto index_of = [&](const Bitset& mask) {
    auto it = std::lower_bound(cuts.begin(), cuts.end(), mask);
    if (it == cuts.end() || !(*it == mask))
      throw Error(ErrorKind::InternalContradiction, "involution leaves the completion");
    return int(it - cuts.begin());
  };

  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) inv[i] = index_of(s.image(upper_bounds(p, cuts[i])));

  std::vector<int> embedding(n);
  for (int q = 0; q < n; ++q) embedding[q] = index_of(p.down_set(q));

  Universe uni(SepSystem(std::move(lattice), std::move(inv)));
  return {s, std::move(uni), std::move(cuts), std::move(embedding)};
}

Report verify_dm(const DMCompletion& c) {
  Report r;
  const Poset& src = c.source.poset();
  const Poset& lat = c.universe.poset();
  int m = c.universe.size();

  for (int i = 0; i < m; ++i)
    if (!(lower_bounds(src, upper_bounds(src, c.cuts[i])) == c.cuts[i])) {
      r.add("element " + lat.label(i) + " is not a closed cut");
      return r;
    }

  // Mask order must agree with the universe order.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (lat.leq(i, j) != c.cuts[i].is_subset_of(c.cuts[j])) {
        r.add("completion order is not inclusion");
        return r;
      }

  Report uni = c.universe.validate();
  if (!uni.ok()) {
    r.problems.insert(r.problems.end(), uni.problems.begin(), uni.problems.end());
    return r;
  }

  // The involution is X -> X^{u*} on the stored cuts.
  for (int i = 0; i < m; ++i) {
    int img = c.index_of_cut(c.source.image(upper_bounds(src, c.cuts[i])));
    if (img != c.universe.inv(i)) {
      r.add("involution disagrees with X^{u*} at " + lat.label(i));
      return r;
    }
  }

  // Embedding properties: order-embedding, commutes with the involutions.
  int n = src.size();
  for (int q = 0; q < n; ++q)
    for (int t = 0; t < n; ++t)
      if (src.leq(q, t) != lat.leq(c.embedding[q], c.embedding[t])) {
        r.add("embedding is not an order-embedding");
        return r;
      }
  for (int q = 0; q < n; ++q)
    if (c.universe.inv(c.embedding[q]) != c.embedding[c.source.inv(q)]) {
      r.add("embedding does not commute with the involution at '" + src.label(q) + "'");
      return r;
    }

  // phi(t) = phi(q) v phi(t') exactly for pre-existing suprema, dually infima.
  std::vector<int> preimage(m, -1);
  for (int q = 0; q < n; ++q) preimage[c.embedding[q]] = q;
  for (int q = 0; q < n; ++q)
    for (int t = 0; t < n; ++t) {
      BoundResult sup = src.supremum(q, t);
      int join = c.universe.join(c.embedding[q], c.embedding[t]);
      int join_pre = preimage[join];
      if (sup.element) {
        if (join != c.embedding[*sup.element]) {
          r.add("pre-existing supremum of '" + src.label(q) + "', '" + src.label(t) +
                "' not preserved");
          return r;
        }
      } else if (join_pre >= 0) {
        r.add("join of '" + src.label(q) + "', '" + src.label(t) +
              "' lands on an embedded element without a source supremum");
        return r;
      }
      BoundResult inf = src.infimum(q, t);
      int meet = c.universe.meet(c.embedding[q], c.embedding[t]);
      int meet_pre = preimage[meet];
      if (inf.element) {
        if (meet != c.embedding[*inf.element]) {
          r.add("pre-existing infimum of '" + src.label(q) + "', '" + src.label(t) +
                "' not preserved");
          return r;
        }
      } else if (meet_pre >= 0) {
        r.add("meet of '" + src.label(q) + "', '" + src.label(t) +
              "' lands on an embedded element without a source infimum");
        return r;
      }
    }
  return r;
}

}  // namespace seps
