#include "seps/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "seps/error.hpp"

namespace seps {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relation,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n_ <= 0) throw Error(ErrorKind::InvalidPoset, "poset must be non-empty");
  up_.assign(n_, Bitset(n_));
  for (int a = 0; a < n_; ++a) up_[a].set(a);
  for (auto [a, b] : relation) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw Error(ErrorKind::InvalidPoset, "relation index out of range");
    up_[a].set(b);
  }
  // Warshall closure on bitset rows.
  for (int k = 0; k < n_; ++k)
    for (int a = 0; a < n_; ++a)
      if (up_[a].test(k)) up_[a] |= up_[k];
  finish_construction();
}

Poset::Poset(std::vector<Bitset> up_rows, std::vector<std::string> labels)
    : n_(int(up_rows.size())), labels_(std::move(labels)), up_(std::move(up_rows)) {
  for (int a = 0; a < n_; ++a)
    if (!up_[a].test(a)) throw Error(ErrorKind::InvalidPoset, "order not reflexive");
  for (int a = 0; a < n_; ++a) {
    Bitset closed = up_[a];
    for (int b = up_[a].first(); b >= 0; b = up_[a].next(b)) closed |= up_[b];
    if (closed != up_[a]) throw Error(ErrorKind::InvalidPoset, "order not transitive");
  }
  finish_construction();
}

Poset::Poset(std::vector<Bitset> up_rows, std::vector<std::string> labels,
             std::vector<int32_t> join_table, std::vector<int32_t> meet_table)
    : n_(int(up_rows.size())),
      labels_(std::move(labels)),
      up_(std::move(up_rows)),
      join_table_(std::move(join_table)),
      meet_table_(std::move(meet_table)) {
  for (int a = 0; a < n_; ++a)
    if (!up_[a].test(a)) throw Error(ErrorKind::InvalidPoset, "order not reflexive");
  if (join_table_.size() != size_t(n_) * n_ || meet_table_.size() != size_t(n_) * n_)
    throw Error(ErrorKind::InvalidPoset, "lattice table size mismatch");
  finish_construction(/*skip_tables=*/true);
  lattice_ = true;
  verify_preset_tables();
}

void Poset::finish_construction(bool skip_tables) {
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int a = 0; a < n_; ++a) labels_[a] = "e" + std::to_string(a);
  }
  if (int(labels_.size()) != n_)
    throw Error(ErrorKind::InvalidPoset, "label count does not match element count");

  down_.assign(n_, Bitset(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = up_[a].first(); b >= 0; b = up_[a].next(b)) {
      if (b != a && up_[b].test(a))
        throw Error(ErrorKind::InvalidPoset,
                    "order not antisymmetric between '" + labels_[a] + "' and '" +
                        labels_[b] + "'");
      down_[b].set(a);
    }

  // Any order sorted by |down-set| is a linear extension: a < b forces
  // down(a) to be a proper subset of down(b).
  topo_.resize(n_);
  std::iota(topo_.begin(), topo_.end(), 0);
  std::vector<int> card(n_);
  for (int a = 0; a < n_; ++a) card[a] = down_[a].count();
  std::stable_sort(topo_.begin(), topo_.end(),
                   [&](int a, int b) { return card[a] < card[b]; });

  if (!skip_tables) compute_tables();
}

void Poset::verify_preset_tables() const {
  // Full least/greatest verification is cubic-ish; do it only at small sizes
  // and fall back to an upper/lower bound check above that.
  if (n_ <= 256) {
    for (int a = 0; a < n_; ++a)
      for (int b = a; b < n_; ++b) {
        BoundResult s = supremum(a, b), i = infimum(a, b);
        if (!s.element || *s.element != join_table_[size_t(a) * n_ + b] ||
            !i.element || *i.element != meet_table_[size_t(a) * n_ + b])
          throw Error(ErrorKind::InternalContradiction, "preset lattice table is wrong");
      }
    return;
  }
  for (int a = 0; a < n_; ++a)
    for (int b = a; b < n_; ++b) {
      int j = join_table_[size_t(a) * n_ + b], m = meet_table_[size_t(a) * n_ + b];
      if (j < 0 || j >= n_ || m < 0 || m >= n_ || !leq(a, j) || !leq(b, j) ||
          !leq(m, a) || !leq(m, b))
        throw Error(ErrorKind::InternalContradiction, "preset lattice table is wrong");
    }
}

int Poset::index_of_label(const std::string& s) const {
  for (int a = 0; a < n_; ++a)
    if (labels_[a] == s) return a;
  return -1;
}

BoundResult Poset::supremum(int a, int b) const {
  Bitset common = up_[a] & up_[b];
  if (common.none()) return {std::nullopt, BoundResult::Detail::NoCommonBound};
  // The earliest common bound in a linear extension is a minimal one; it is
  // the least bound iff it lies below every other common bound.
  for (int t : topo_) {
    if (!common.test(t)) continue;
    if (common.is_subset_of(up_[t])) return {t, BoundResult::Detail::Found};
    return {std::nullopt, BoundResult::Detail::NotUnique};
  }
  return {std::nullopt, BoundResult::Detail::NoCommonBound};  // unreachable
}

BoundResult Poset::infimum(int a, int b) const {
  Bitset common = down_[a] & down_[b];
  if (common.none()) return {std::nullopt, BoundResult::Detail::NoCommonBound};
  for (size_t k = topo_.size(); k-- > 0;) {
    int t = topo_[k];
    if (!common.test(t)) continue;
    if (common.is_subset_of(down_[t])) return {t, BoundResult::Detail::Found};
    return {std::nullopt, BoundResult::Detail::NotUnique};
  }
  return {std::nullopt, BoundResult::Detail::NoCommonBound};  // unreachable
}

void Poset::compute_tables() {
  lattice_ = true;
  join_table_.assign(size_t(n_) * n_, -1);
  meet_table_.assign(size_t(n_) * n_, -1);
  for (int a = 0; a < n_ && lattice_; ++a) {
    for (int b = a; b < n_; ++b) {
      BoundResult s = supremum(a, b);
      BoundResult i = infimum(a, b);
      if (!s.element || !i.element) {
        lattice_ = false;
        break;
      }
      join_table_[size_t(a) * n_ + b] = join_table_[size_t(b) * n_ + a] = *s.element;
      meet_table_[size_t(a) * n_ + b] = meet_table_[size_t(b) * n_ + a] = *i.element;
    }
  }
  if (!lattice_) {
    join_table_.clear();
    meet_table_.clear();
  }
}

int Poset::join(int a, int b) const {
  if (!lattice_) throw Error(ErrorKind::NotALattice, "join requested on a non-lattice");
  return join_table_[size_t(a) * n_ + b];
}

int Poset::meet(int a, int b) const {
  if (!lattice_) throw Error(ErrorKind::NotALattice, "meet requested on a non-lattice");
  return meet_table_[size_t(a) * n_ + b];
}

std::optional<int> Poset::bottom() const {
  for (int a = 0; a < n_; ++a)
    if (up_[a].count() == n_) return a;
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  for (int a = 0; a < n_; ++a)
    if (down_[a].count() == n_) return a;
  return std::nullopt;
}

std::vector<int> Poset::lower_covers(int a) const {
  Bitset strictly_below = down_[a];
  strictly_below.reset(a);
  return maximal_elements(strictly_below);
}

std::vector<int> Poset::upper_covers(int a) const {
  Bitset strictly_above = up_[a];
  strictly_above.reset(a);
  return minimal_elements(strictly_above);
}

std::vector<int> Poset::minimal_elements(const Bitset& subset) const {
  std::vector<int> out;
  for (int a = subset.first(); a >= 0; a = subset.next(a)) {
    Bitset below = down_[a] & subset;
    below.reset(a);
    if (below.none()) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::maximal_elements(const Bitset& subset) const {
  std::vector<int> out;
  for (int a = subset.first(); a >= 0; a = subset.next(a)) {
    Bitset above = up_[a] & subset;
    above.reset(a);
    if (above.none()) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::join_irreducibles() const {
  if (!lattice_)
    throw Error(ErrorKind::NotALattice, "join-irreducibles requested on a non-lattice");
  if (n_ == 0) return {};
  std::vector<int> out;
  int bot = *bottom();
  for (int a = 0; a < n_; ++a)
    if (a != bot && lower_covers(a).size() == 1) out.push_back(a);
  return out;
}

bool Poset::is_distributive() const {
  if (!lattice_)
    throw Error(ErrorKind::NotALattice, "distributivity requested on a non-lattice");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) {
        if (join(a, meet(b, c)) != meet(join(a, b), join(a, c))) return false;
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
      }
  return true;
}

Poset Poset::induced(const std::vector<int>& elems) const {
  int m = int(elems.size());
  std::vector<Bitset> rows(m, Bitset(m));
  std::vector<std::string> labs(m);
  for (int i = 0; i < m; ++i) {
    labs[i] = labels_[elems[i]];
    for (int j = 0; j < m; ++j)
      if (leq(elems[i], elems[j])) rows[i].set(j);
  }
  return Poset(std::move(rows), std::move(labs));
}

Poset Poset::dual() const {
  std::vector<Bitset> rows = down_;
  return Poset(std::move(rows), labels_);
}

IrreduciblePoset join_irreducible_poset(const Poset& lattice) {
  std::vector<int> elems = lattice.join_irreducibles();
  return {elems, lattice.induced(elems)};
}

bool is_down_closed(const Poset& p, const Bitset& members) {
  for (int a = members.first(); a >= 0; a = members.next(a))
    if (!p.down_set(a).is_subset_of(members)) return false;
  return true;
}

std::vector<Bitset> all_down_sets(const Poset& p, int max_size) {
  // Grow each down-set by one maximal element at a time.
  std::vector<Bitset> out;
  std::map<Bitset, bool> seen;
  Bitset empty(p.size());
  seen[empty] = true;
  std::vector<Bitset> frontier = {empty};
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& d : frontier) {
      out.push_back(d);
      if (int(out.size()) + int(next.size()) > max_size)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "down-set family exceeds " + std::to_string(max_size) + " elements");
      for (int a = 0; a < p.size(); ++a) {
        if (d.test(a)) continue;
        Bitset strictly_below = p.down_set(a);
        strictly_below.reset(a);
        if (!strictly_below.is_subset_of(d)) continue;
        Bitset grown = d;
        grown.set(a);
        if (!seen[grown]) {
          seen[grown] = true;
          next.push_back(grown);
          if (int(out.size()) + int(next.size()) > max_size)
            throw Error(ErrorKind::SizeLimitExceeded,
                        "down-set family exceeds " + std::to_string(max_size) +
                            " elements");
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset inclusion_poset(const std::vector<Bitset>& masks, std::vector<std::string> labels,
                      bool union_intersection_tables) {
  int n = int(masks.size());
  if (n == 0) throw Error(ErrorKind::InvalidPoset, "empty family");
  for (int i = 0; i + 1 < n; ++i)
    if (!(masks[i] < masks[i + 1]))
      throw Error(ErrorKind::InvalidPoset, "mask family not sorted");
  std::vector<Bitset> rows(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (masks[i].is_subset_of(masks[j])) rows[i].set(j);
  if (!union_intersection_tables) return Poset(std::move(rows), std::move(labels));

  auto lookup = [&](const Bitset& m) {
    auto it = std::lower_bound(masks.begin(), masks.end(), m);
    if (it == masks.end() || !(*it == m))
      throw Error(ErrorKind::NotALattice, "family not closed under union/intersection");
    return int32_t(it - masks.begin());
  };
  std::vector<int32_t> join(size_t(n) * n), meet(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      join[size_t(i) * n + j] = join[size_t(j) * n + i] = lookup(masks[i] | masks[j]);
      meet[size_t(i) * n + j] = meet[size_t(j) * n + i] = lookup(masks[i] & masks[j]);
    }
  return Poset(std::move(rows), std::move(labels), std::move(join), std::move(meet));
}

int DownSetLattice::index_of(const Bitset& mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it != masks.end() && *it == mask) return int(it - masks.begin());
  return -1;
}

DownSetLattice downset_lattice(const Poset& p, int max_size) {
  std::vector<Bitset> masks = all_down_sets(p, max_size);
  std::vector<std::string> labels;
  labels.reserve(masks.size());
  for (const Bitset& m : masks) {
    std::string s = "{";
    bool first = true;
    for (int a = m.first(); a >= 0; a = m.next(a)) {
      if (!first) s += ",";
      s += p.label(a);
      first = false;
    }
    s += "}";
    labels.push_back(std::move(s));
  }
  Poset lat = inclusion_poset(masks, std::move(labels), true);
  return {std::move(lat), std::move(masks)};
}

}  // namespace seps
