#include "seps/sepsys.hpp"

#include <algorithm>
#include <map>

#include "seps/error.hpp"

namespace seps {

std::string Report::to_string() const {
  std::string out;
  for (const auto& p : problems) {
    out += p;
    out += '\n';
  }
  return out;
}

SepSystem::SepSystem(Poset poset, std::vector<int> inv)
    : poset_(std::move(poset)), inv_(std::move(inv)) {
  if (poset_.size() == 0)
    throw Error(ErrorKind::InvalidInvolution, "separation system must be non-empty");
  if (int(inv_.size()) != poset_.size())
    throw Error(ErrorKind::InvalidInvolution, "involution size mismatch");
  std::vector<bool> hit(inv_.size(), false);
  for (int v : inv_) {
    if (v < 0 || v >= int(inv_.size()) || hit[v])
      throw Error(ErrorKind::InvalidInvolution, "involution is not a permutation");
    hit[v] = true;
  }
}

Report SepSystem::validate() const {
  Report r;
  int n = size();
  for (int s = 0; s < n; ++s)
    if (inv_[inv_[s]] != s) {
      r.add("involution not self-inverse at '" + poset_.label(s) + "'");
      break;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (poset_.leq(a, b) && !poset_.leq(inv_[b], inv_[a])) {
        r.add("involution not order-reversing: '" + poset_.label(a) + "' <= '" +
              poset_.label(b) + "' but '" + poset_.label(inv_[b]) + "' <= '" +
              poset_.label(inv_[a]) + "' fails");
        return r;
      }
  return r;
}

std::vector<int> SepSystem::orbit_reps() const {
  std::vector<int> out;
  for (int s = 0; s < size(); ++s)
    if (s <= inv_[s]) out.push_back(s);
  return out;
}

Bitset SepSystem::image(const Bitset& members) const {
  Bitset out(size());
  for (int s = members.first(); s >= 0; s = members.next(s)) out.set(inv_[s]);
  return out;
}

Universe::Universe(SepSystem sys) : sys_(std::move(sys)) {
  if (!sys_.poset().is_lattice())
    throw Error(ErrorKind::NotALattice, "universe poset is not a lattice");
}

Report Universe::validate() const {
  Report r = sys_.validate();
  const Poset& p = poset();
  if (!p.is_lattice()) {
    r.add("not a lattice");
    return r;
  }
  if (!r.ok()) return r;  // De Morgan presupposes a valid involution
  for (int a = 0; a < p.size(); ++a)
    for (int b = a; b < p.size(); ++b) {
      if (inv(p.join(a, b)) != p.meet(inv(a), inv(b))) {
        r.add("De Morgan fails for join of '" + p.label(a) + "', '" + p.label(b) + "'");
        return r;
      }
      if (inv(p.meet(a, b)) != p.join(inv(a), inv(b))) {
        r.add("De Morgan fails for meet of '" + p.label(a) + "', '" + p.label(b) + "'");
        return r;
      }
    }
  return r;
}

std::array<int, 4> Universe::corners(int r, int s) const {
  return {join(r, s), join(inv(r), s), join(r, inv(s)), join(inv(r), inv(s))};
}

Report validate_subsystem(const SepSystem& sys, const Bitset& members) {
  Report r;
  for (int s = members.first(); s >= 0; s = members.next(s))
    if (!members.test(sys.inv(s))) {
      r.add("subsystem not involution-closed at '" + sys.poset().label(s) + "'");
      return r;
    }
  return r;
}

std::string side_label(uint32_t mask, const std::vector<std::string>& ground) {
  std::string s = "{";
  bool first = true;
  for (size_t i = 0; i < ground.size(); ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += ground[i];
      first = false;
    }
  return s + "}";
}

BipartitionUniverse bipartition_universe(std::vector<std::string> ground,
                                         int max_elements) {
  // The empty ground yields the one-element universe whose sole separation is
  // its own inverse; callers that need a non-empty ground enforce it at the
  // input boundary.
  if (ground.size() > 20 || (int64_t(1) << ground.size()) > max_elements)
    throw Error(ErrorKind::SizeLimitExceeded,
                "2^" + std::to_string(ground.size()) + " oriented bipartitions exceed the bound");
  int m = int(ground.size());
  int n = 1 << m;
  std::vector<Bitset> masks(n, Bitset(m));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < m; ++i)
      if (a >> i & 1) masks[a].set(i);
    labels[a] = side_label(uint32_t(a), ground);
  }
  Poset p = inclusion_poset(masks, std::move(labels), true);
  std::vector<int> inv(n);
  for (int a = 0; a < n; ++a) inv[a] = (n - 1) ^ a;
  return {std::move(ground), Universe(SepSystem(std::move(p), std::move(inv)))};
}

int SetSeparationUniverse::index_of_sides(uint32_t a, uint32_t b) const {
  auto it = std::lower_bound(sides.begin(), sides.end(), std::make_pair(a, b));
  if (it != sides.end() && *it == std::make_pair(a, b)) return int(it - sides.begin());
  return -1;
}

Bitset SetSeparationUniverse::embedded_bipartitions() const {
  uint32_t full = (uint32_t(1) << ground.size()) - 1;
  Bitset out(int(sides.size()));
  for (size_t i = 0; i < sides.size(); ++i)
    if ((sides[i].first ^ sides[i].second) == full) out.set(int(i));
  return out;
}

SetSeparationUniverse set_separation_universe(std::vector<std::string> ground,
                                              int max_elements) {
  if (ground.empty())
    throw Error(ErrorKind::InvalidPoset, "ground set must be non-empty");
  int m = int(ground.size());
  int64_t count = 1;
  for (int i = 0; i < m; ++i) count *= 3;
  if (count > max_elements)
    throw Error(ErrorKind::SizeLimitExceeded,
                "3^" + std::to_string(m) + " set separations exceed the bound");

  uint32_t full = (uint32_t(1) << m) - 1;
  std::vector<std::pair<uint32_t, uint32_t>> sides;
  for (uint32_t a = 0; a <= full; ++a)
    for (uint32_t b = 0; b <= full; ++b)
      if ((a | b) == full) sides.emplace_back(a, b);
  std::sort(sides.begin(), sides.end());

  int n = int(sides.size());
  std::vector<Bitset> rows(n, Bitset(n));
  std::vector<std::string> labels(n);
  auto index_of = [&](uint32_t a, uint32_t b) {
    auto it = std::lower_bound(sides.begin(), sides.end(), std::make_pair(a, b));
    return int(it - sides.begin());
  };
  for (int i = 0; i < n; ++i) {
    labels[i] = "(" + side_label(sides[i].first, ground) + "," +
                side_label(sides[i].second, ground) + ")";
    for (int j = 0; j < n; ++j)
      if ((sides[i].first & ~sides[j].first) == 0 &&
          (sides[j].second & ~sides[i].second) == 0)
        rows[i].set(j);  // (A,B) <= (C,D) iff A c= C and B =) D
  }
  std::vector<int32_t> join(size_t(n) * n), meet(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      join[size_t(i) * n + j] =
          index_of(sides[i].first | sides[j].first, sides[i].second & sides[j].second);
      meet[size_t(i) * n + j] =
          index_of(sides[i].first & sides[j].first, sides[i].second | sides[j].second);
    }
  Poset p(std::move(rows), std::move(labels), std::move(join), std::move(meet));
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = index_of(sides[i].second, sides[i].first);
  SetSeparationUniverse out{std::move(ground),
                            Universe(SepSystem(std::move(p), std::move(inv))),
                            std::move(sides)};
  return out;
}

Universe double_universe(const Poset& lattice) {
  if (!lattice.is_lattice())
    throw Error(ErrorKind::NotALattice, "doubling requires a lattice");
  int n = lattice.size();
  int N = 2 * n;
  std::vector<Bitset> rows(N, Bitset(N));
  std::vector<std::string> labels(N);
  for (int a = 0; a < n; ++a) {
    labels[a] = lattice.label(a);
    labels[n + a] = lattice.label(a) + "'";
    for (int b = 0; b < n; ++b) {
      if (lattice.leq(a, b)) rows[a].set(b);
      if (lattice.leq(b, a)) rows[n + a].set(n + b);  // reversed copy
      rows[a].set(n + b);                             // all of L below all of L'
    }
  }
  std::vector<int32_t> join(size_t(N) * N), meet(size_t(N) * N);
  auto J = [&](int a, int b) -> int32_t& { return join[size_t(a) * N + b]; };
  auto M = [&](int a, int b) -> int32_t& { return meet[size_t(a) * N + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      J(a, b) = lattice.join(a, b);
      M(a, b) = lattice.meet(a, b);
      J(n + a, n + b) = n + lattice.meet(a, b);  // joins in L' are meets in L
      M(n + a, n + b) = n + lattice.join(a, b);
      J(a, n + b) = J(n + b, a) = n + b;
      M(a, n + b) = M(n + b, a) = a;
    }
  Poset p(std::move(rows), std::move(labels), std::move(join), std::move(meet));
  std::vector<int> inv(N);
  for (int a = 0; a < n; ++a) {
    inv[a] = n + a;
    inv[n + a] = a;
  }
  return Universe(SepSystem(std::move(p), std::move(inv)));
}

Bitset lift_subset_to_double(const Poset& lattice, const Bitset& subset) {
  int n = lattice.size();
  Bitset out(2 * n);
  for (int a = subset.first(); a >= 0; a = subset.next(a)) {
    out.set(a);
    out.set(n + a);
  }
  return out;
}

}  // namespace seps
