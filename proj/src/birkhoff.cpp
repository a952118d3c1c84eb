#include "seps/birkhoff.hpp"

#include <algorithm>

#include "seps/error.hpp"

namespace seps {

int BirkhoffRep::element_of(const Bitset& downset) const {
  auto it = eta_inv.find(downset);
  return it == eta_inv.end() ? -1 : it->second;
}

BirkhoffRep birkhoff(const Poset& lattice) {
  if (!lattice.is_lattice())
    throw Error(ErrorKind::NotALattice, "Birkhoff representation needs a lattice");
  if (!lattice.is_distributive())
    throw Error(ErrorKind::NotDistributive, "Birkhoff representation needs distributivity");

  BirkhoffRep rep;
  IrreduciblePoset ip = join_irreducible_poset(lattice);
  rep.irreducibles = ip.elements;
  rep.jposet = std::move(ip.poset);

  int n = lattice.size();
  int m = int(rep.irreducibles.size());
  rep.eta.assign(n, Bitset(m));
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < m; ++k)
      if (lattice.leq(rep.irreducibles[k], a)) rep.eta[a].set(k);

  for (int a = 0; a < n; ++a) {
    if (!rep.eta_inv.emplace(rep.eta[a], a).second)
      throw Error(ErrorKind::InternalContradiction, "eta is not injective");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (lattice.leq(a, b) != rep.eta[a].is_subset_of(rep.eta[b]))
        throw Error(ErrorKind::InternalContradiction, "eta is not an order isomorphism");
      if (!(rep.eta[lattice.join(a, b)] == (rep.eta[a] | rep.eta[b])) ||
          !(rep.eta[lattice.meet(a, b)] == (rep.eta[a] & rep.eta[b])))
        throw Error(ErrorKind::InternalContradiction, "eta does not map joins/meets");
    }
  // Image must be all of O(J(L)); with injectivity a count comparison does it.
  if (int(all_down_sets(rep.jposet, n + 1).size()) != n)
    throw Error(ErrorKind::InternalContradiction, "eta is not onto the down-sets");
  return rep;
}

int InvPosetUniverse::index_of(const Bitset& mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it != masks.end() && *it == mask) return int(it - masks.begin());
  return -1;
}

InvPosetUniverse universe_from_involution_poset(const SepSystem& p, int max_elements) {
  Report valid = p.validate();
  if (!valid.ok())
    throw Error(ErrorKind::InvalidInvolutionPoset, valid.problems.front());

  DownSetLattice ds = downset_lattice(p.poset(), max_elements);
  int m = int(ds.masks.size());
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) {
    int img = ds.index_of(p.image(ds.masks[i]).complement());
    if (img < 0)
      throw Error(ErrorKind::InternalContradiction, "X -> P \\ X' leaves the down-sets");
    inv[i] = img;
  }
  Universe uni(SepSystem(std::move(ds.lattice), std::move(inv)));
  Report r = uni.validate();
  if (!r.ok()) throw Error(ErrorKind::InternalContradiction, r.problems.front());
  return {std::move(uni), std::move(ds.masks)};
}

BirkhoffRep birkhoff_universe(const Universe& u) {
  Report valid = u.validate();
  if (!valid.ok()) throw Error(ErrorKind::InvalidInvolution, valid.problems.front());

  BirkhoffRep rep = birkhoff(u.poset());
  int m = int(rep.irreducibles.size());

  // The involution * transported to down-sets of J(U).
  auto star = [&](const Bitset& x) {
    int a = rep.element_of(x);
    if (a < 0)
      throw Error(ErrorKind::InternalContradiction, "star applied to a non-down-set");
    return rep.eta[u.inv(a)];
  };

  rep.jinv.assign(m, -1);
  for (int k = 0; k < m; ++k) {
    Bitset below = rep.jposet.down_set(k);  // down(x), as positions in J
    Bitset without = below;
    without.reset(k);  // down(x) - x, still a down-set
    Bitset candidates = star(without).minus(star(below));
    if (candidates.count() != 1)
      throw Error(ErrorKind::InternalContradiction,
                  "induced involution is not unique at '" + rep.jposet.label(k) +
                      "' (input universe invalid?)");
    rep.jinv[k] = candidates.first();
  }

  for (int k = 0; k < m; ++k)
    if (rep.jinv[rep.jinv[k]] != k)
      throw Error(ErrorKind::InternalContradiction, "induced map is not an involution");
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      if (rep.jposet.leq(k, l) != rep.jposet.leq(rep.jinv[l], rep.jinv[k]))
        throw Error(ErrorKind::InternalContradiction, "induced involution not order-reversing");

  // X^* = P \ X' for every down-set (eta is onto, so looping over elements
  // covers them all), and the counting identity.
  for (int a = 0; a < u.size(); ++a) {
    const Bitset& x = rep.eta[a];
    Bitset image(m);
    for (int k = x.first(); k >= 0; k = x.next(k)) image.set(rep.jinv[k]);
    if (!(star(x) == image.complement()))
      throw Error(ErrorKind::InternalContradiction, "X^* != P \\ X'");
    if (star(x).count() != m - x.count())
      throw Error(ErrorKind::InternalContradiction, "|X^*| != |P| - |X|");
  }
  // down(x)^* = P \ up(x').
  for (int k = 0; k < m; ++k)
    if (!(star(rep.jposet.down_set(k)) == rep.jposet.up_set(rep.jinv[k]).complement()))
      throw Error(ErrorKind::InternalContradiction, "down(x)^* != P \\ up(x')");
  return rep;
}

}  // namespace seps
