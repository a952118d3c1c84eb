#include "seps/functions.hpp"

#include <algorithm>

#include "seps/birkhoff.hpp"
#include "seps/error.hpp"
#include "seps/order_induced.hpp"

namespace seps {

LevelledPartition levelled_partition(const Poset& lattice, int x, int y, const Rat& k) {
  if (!lattice.is_lattice())
    throw Error(ErrorKind::NotALattice, "interval extension needs a lattice");
  if (!lattice.leq(x, y))
    throw Error(ErrorKind::NotAnInterval,
                "'" + lattice.label(x) + "' is not below '" + lattice.label(y) + "'");
  int n = lattice.size();
  LevelledPartition lp;
  lp.x = x;
  lp.y = y;
  lp.interval = lattice.up_set(x) & lattice.down_set(y);
  lp.below = lattice.down_set(y).minus(lp.interval);
  lp.above = lattice.up_set(x).minus(lp.interval);
  lp.beside = Bitset::full(n).minus(lp.interval | lp.below | lp.above);

  lp.dl.assign(n, -1);
  lp.ul.assign(n, -1);
  // Levels recurse along <, so fill in order of down-set size.
  std::vector<int> order(n);
  for (int a = 0; a < n; ++a) order[a] = a;
  std::vector<int> card(n);
  for (int a = 0; a < n; ++a) card[a] = lattice.down_set(a).count();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return card[a] < card[b]; });
  for (int a : order) {
    if (!lattice.leq(a, y)) continue;
    int level = 0;
    const Bitset& strictly_below = lattice.down_set(a);
    for (int z = strictly_below.first(); z >= 0; z = strictly_below.next(z))
      if (z != a) level = std::max(level, lp.dl[z] + 1);
    lp.dl[a] = level;
  }
  for (size_t i = order.size(); i-- > 0;) {
    int a = order[i];
    if (!lattice.leq(x, a)) continue;
    int level = 0;
    const Bitset& strictly_above = lattice.up_set(a);
    for (int z = strictly_above.first(); z >= 0; z = strictly_above.next(z))
      if (z != a) level = std::max(level, lp.ul[z] + 1);
    lp.ul[a] = level;
  }

  lp.max_level = 0;
  for (int a = 0; a < n; ++a) lp.max_level = std::max({lp.max_level, lp.dl[a], lp.ul[a]});
  // The scale 2^l * k degenerates at k = 0; max(k, 1) keeps every estimate
  // intact and the outside values strictly above k.
  lp.scale = Rat::pow2(lp.max_level) * max(k, Rat(1));
  return lp;
}

Valuation extend_from_interval(const Poset& lattice, int x, int y, const Valuation& f) {
  if (!lattice.is_lattice())
    throw Error(ErrorKind::NotALattice, "interval extension needs a lattice");
  if (x < 0 || y < 0 || x >= lattice.size() || y >= lattice.size() || !lattice.leq(x, y))
    throw Error(ErrorKind::NotAnInterval, "invalid interval endpoints");
  if (int(f.size()) != lattice.size())
    throw Error(ErrorKind::NotAnInterval, "valuation must be indexed by the lattice");

  Bitset interval = lattice.up_set(x) & lattice.down_set(y);
  Rat k(0);
  for (int a = interval.first(); a >= 0; a = interval.next(a)) {
    if (f[a].is_negative())
      throw Error(ErrorKind::InputNotSubmodular, "valuation must be nonnegative");
    k = max(k, f[a]);
  }
  for (int a = interval.first(); a >= 0; a = interval.next(a))
    for (int b = interval.next(a); b >= 0; b = interval.next(b)) {
      if (!lattice.incomparable(a, b)) continue;
      if (f[a] + f[b] < f[lattice.join(a, b)] + f[lattice.meet(a, b)])
        throw Error(ErrorKind::InputNotSubmodular,
                    "input not submodular on the interval at '" + lattice.label(a) +
                        "', '" + lattice.label(b) + "'");
    }

  LevelledPartition lp = levelled_partition(lattice, x, y, k);
  const Rat& M = lp.scale;
  Valuation g(lattice.size());
  for (int z = 0; z < lattice.size(); ++z) {
    if (lp.interval.test(z)) g[z] = f[z];
    else if (lp.below.test(z)) g[z] = M * (Rat(2) - Rat::pow2(-lp.dl[z]));
    else if (lp.above.test(z)) g[z] = M * (Rat(2) - Rat::pow2(-lp.ul[z]));
    else g[z] = Rat(4) * M;
  }

  if (auto viol = find_submodularity_violation(lattice, g))
    throw Error(ErrorKind::InternalContradiction, "extension is not submodular");
  for (int z = 0; z < lattice.size(); ++z)
    if (!lp.interval.test(z) && !(k < g[z]))
      throw Error(ErrorKind::InternalContradiction, "extension not above k outside");
  return g;
}

Valuation dense_sublattice_function(const DownSetLattice& op, const Bitset& members) {
  const Poset& lat = op.lattice;
  int n = lat.size();
  if (members.none())
    throw Error(ErrorKind::MissingTopOrBottom, "sublattice is empty");
  std::optional<int> bot = lat.bottom(), top = lat.top();
  if (!bot || !top || !members.test(*bot) || !members.test(*top))
    throw Error(ErrorKind::MissingTopOrBottom,
                "sublattice must contain the empty and the full down-set");
  for (int a = members.first(); a >= 0; a = members.next(a))
    for (int b = members.next(a); b >= 0; b = members.next(b))
      if (!members.test(lat.join(a, b)) || !members.test(lat.meet(a, b)))
        throw Error(ErrorKind::NotASublattice, "family not closed under union/intersection");

  int ground = op.masks.empty() ? 0 : op.masks[0].universe_size();
  // X_p: intersection of the members containing p. The top member makes every
  // X_p non-empty.
  std::vector<Bitset> xp(ground, Bitset(ground));
  for (int p = 0; p < ground; ++p) {
    Bitset acc = Bitset::full(ground);
    for (int e = members.first(); e >= 0; e = members.next(e))
      if (op.masks[e].test(p)) acc &= op.masks[e];
    xp[p] = acc;
  }

  Valuation f(n);
  for (int ysel = 0; ysel < n; ++ysel) {
    const Bitset& y = op.masks[ysel];
    int64_t total = 0;
    for (int p = y.first(); p >= 0; p = y.next(p)) total += xp[p].minus(y).count();
    f[ysel] = Rat(total);
  }

  if (auto viol = find_submodularity_violation(lat, f))
    throw Error(ErrorKind::InternalContradiction, "dense construction not submodular");
  for (int e = 0; e < n; ++e)
    if ((f[e] == Rat(0)) != members.test(e))
      throw Error(ErrorKind::InternalContradiction, "zero set differs from the sublattice");
  return f;
}

ThresholdFunction sublattice_function(const Poset& lattice, const Bitset& sublattice) {
  if (!lattice.is_lattice())
    throw Error(ErrorKind::NotALattice, "sublattice function needs a lattice");
  if (!lattice.is_distributive())
    throw Error(ErrorKind::NotDistributive, "sublattice function needs distributivity");
  if (sublattice.none())
    throw Error(ErrorKind::NotASublattice, "sublattice must be non-empty");
  for (int a = sublattice.first(); a >= 0; a = sublattice.next(a))
    for (int b = sublattice.next(a); b >= 0; b = sublattice.next(b))
      if (!sublattice.test(lattice.join(a, b)) || !sublattice.test(lattice.meet(a, b)))
        throw Error(ErrorKind::NotASublattice,
                    "not closed under joins/meets at '" + lattice.label(a) + "', '" +
                        lattice.label(b) + "'");

  int bot = sublattice.first(), top = sublattice.first();
  for (int a = sublattice.first(); a >= 0; a = sublattice.next(a)) {
    bot = lattice.meet(bot, a);
    top = lattice.join(top, a);
  }

  // Work inside [bot, top] in Birkhoff coordinates, where the dense
  // construction applies verbatim.
  Bitset interval_mask = lattice.up_set(bot) & lattice.down_set(top);
  std::vector<int> interval = interval_mask.to_vector();
  Poset inner = lattice.induced(interval);
  BirkhoffRep rep = birkhoff(inner);
  DownSetLattice op = downset_lattice(rep.jposet, inner.size() + 1);

  std::vector<int> to_op(interval.size());
  for (size_t i = 0; i < interval.size(); ++i) {
    to_op[i] = op.index_of(rep.eta[int(i)]);
    if (to_op[i] < 0)
      throw Error(ErrorKind::InternalContradiction, "Birkhoff image missing a down-set");
  }
  Bitset members_in_op(op.lattice.size());
  for (size_t i = 0; i < interval.size(); ++i)
    if (sublattice.test(interval[i])) members_in_op.set(to_op[i]);

  Valuation dense = dense_sublattice_function(op, members_in_op);
  Valuation on_interval(lattice.size());
  for (size_t i = 0; i < interval.size(); ++i) on_interval[interval[i]] = dense[to_op[i]];

  Valuation g = extend_from_interval(lattice, bot, top, on_interval);
  ThresholdFunction out{std::move(g), Rat(1, 2)};
  for (int a = 0; a < lattice.size(); ++a)
    if ((out.values[a] <= out.threshold) != sublattice.test(a))
      throw Error(ErrorKind::InternalContradiction, "threshold does not carve the sublattice");
  return out;
}

ThresholdFunction subuniverse_order_function(const Universe& u, const Bitset& subuniverse) {
  for (int s = subuniverse.first(); s >= 0; s = subuniverse.next(s))
    if (!subuniverse.test(u.inv(s)))
      throw Error(ErrorKind::NotASubuniverse,
                  "not involution-closed at '" + u.poset().label(s) + "'");
  ThresholdFunction plain;
  try {
    plain = sublattice_function(u.poset(), subuniverse);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotASublattice)
      throw Error(ErrorKind::NotASubuniverse, e.what());
    throw;
  }
  ThresholdFunction out{symmetrize_sum(u, plain.values), plain.threshold * Rat(2)};
  for (int s = 0; s < u.size(); ++s)
    if ((out.values[s] <= out.threshold) != subuniverse.test(s))
      throw Error(ErrorKind::InternalContradiction, "threshold does not carve the subuniverse");
  return out;
}

Valuation extend_order_function_from_symmetric_interval(const Universe& u, int x,
                                                        const Valuation& f) {
  int y = u.inv(x);
  if (!u.poset().leq(x, y))
    throw Error(ErrorKind::NotSymmetricInterval,
                "'" + u.poset().label(x) + "' is not below its inverse");
  Bitset interval = u.poset().up_set(x) & u.poset().down_set(y);
  Rat k(0);
  for (int z = interval.first(); z >= 0; z = interval.next(z)) {
    if (!(f[z] == f[u.inv(z)]))
      throw Error(ErrorKind::InputNotSymmetric,
                  "not symmetric at '" + u.poset().label(z) + "'");
    k = max(k, f[z]);
  }

  Valuation extended = extend_from_interval(u.poset(), x, y, f);  // checks submodularity
  Valuation g = symmetrize_mean(u, extended);

  for (int z = interval.first(); z >= 0; z = interval.next(z))
    if (!(g[z] == f[z]))
      throw Error(ErrorKind::InternalContradiction, "symmetrization moved interval values");
  for (int z = 0; z < u.size(); ++z)
    if (!interval.test(z) && !(k < g[z]))
      throw Error(ErrorKind::InternalContradiction, "not above k outside the interval");
  if (auto viol = find_submodularity_violation(u.poset(), g))
    throw Error(ErrorKind::InternalContradiction, "symmetrized extension not submodular");
  return g;
}

}  // namespace seps
