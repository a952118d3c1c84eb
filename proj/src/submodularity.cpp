#include "seps/submodularity.hpp"

#include <algorithm>
#include <map>

#include "seps/error.hpp"

namespace seps {

SubmodularityCheck is_submodular_in(const Poset& host, const Bitset& members) {
  SubmodularityCheck out;
  for (int a = members.first(); a >= 0; a = members.next(a))
    for (int b = members.next(a); b >= 0; b = members.next(b)) {
      BoundResult s = host.supremum(a, b);
      if (s.element && members.test(*s.element)) continue;
      BoundResult i = host.infimum(a, b);
      if (i.element && members.test(*i.element)) continue;
      out.ok = false;
      out.violations.emplace_back(a, b);
    }
  return out;
}

bool is_submodular(const Poset& p) {
  return is_submodular_in(p, Bitset::full(p.size())).ok;
}

bool is_corner_closed(const Universe& u, const Bitset& inner, const Bitset& outer) {
  for (int r = inner.first(); r >= 0; r = inner.next(r))
    for (int s = inner.first(); s >= 0; s = inner.next(s)) {
      int j = u.join(r, s);
      if (outer.test(j) && !inner.test(j)) return false;
    }
  return true;
}

DependencyDigraph dependency_digraph(const Poset& lattice, const Bitset& subset) {
  if (!lattice.is_lattice())
    throw Error(ErrorKind::NotALattice, "dependency digraph requires a lattice host");
  int n = lattice.size();
  DependencyDigraph d;
  d.n = n;
  d.subset = subset;

  // (tail, head) -> (witness, via_join); crossing edges use witness -1.
  std::map<std::pair<int, int>, std::pair<int, bool>> found;
  for (int a = 0; a < n; ++a) {
    bool a_in = subset.test(a);
    if (!a_in)
      for (int b = subset.first(); b >= 0; b = subset.next(b))
        found.emplace(std::make_pair(a, b), std::make_pair(-1, false));
    for (int c = subset.first(); c >= 0; c = subset.next(c)) {
      int vee = lattice.join(a, c);
      int wedge = lattice.meet(a, c);
      if (!subset.test(wedge) && subset.test(vee) == a_in && vee != a)
        found.emplace(std::make_pair(a, vee), std::make_pair(c, true));
      if (!subset.test(vee) && subset.test(wedge) == a_in && wedge != a)
        found.emplace(std::make_pair(a, wedge), std::make_pair(c, false));
    }
  }

  d.succ.assign(n, {});
  for (const auto& [key, val] : found) {
    DepEdge e;
    e.tail = key.first;
    e.head = key.second;
    e.witness = val.first;
    e.via_join = val.second;
    bool tin = subset.test(e.tail), hin = subset.test(e.head);
    e.kind = tin && hin    ? DepEdge::Kind::Inner
             : !tin && !hin ? DepEdge::Kind::Outer
                            : DepEdge::Kind::Crossing;
    d.edges.push_back(e);
    d.succ[e.tail].push_back(e.head);
  }
  return d;
}

bool DependencyDigraph::has_edge(int a, int b) const { return edge(a, b) != nullptr; }

const DepEdge* DependencyDigraph::edge(int a, int b) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b),
                             [](const DepEdge& e, const std::pair<int, int>& k) {
                               return std::make_pair(e.tail, e.head) < k;
                             });
  if (it != edges.end() && it->tail == a && it->head == b) return &*it;
  return nullptr;
}

namespace {

// Tarjan's strongly connected components, iterative.
std::vector<int> scc_ids(const DependencyDigraph& d) {
  int n = d.n;
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<int> stk;
  std::vector<bool> on_stack(n, false);
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stk.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < d.succ[f.v].size()) {
        int w = d.succ[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stk.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const DependencyDigraph& d) {
  std::vector<int> comp = scc_ids(d);
  std::vector<int> comp_size(d.n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1, 0);
  for (int v = 0; v < d.n; ++v) ++comp_size[comp[v]];

  int start = -1;
  for (int v = 0; v < d.n && start < 0; ++v) {
    if (comp_size[comp[v]] >= 2) start = v;
    else if (d.has_edge(v, v)) return std::vector<int>{v};
  }
  if (start < 0) return std::nullopt;

  // Depth-first search over simple paths inside start's component, successors
  // ascending; the first path returning to start is the lexicographically
  // least cycle from that start.
  std::vector<bool> visited(d.n, false);
  std::vector<int> path{start};
  visited[start] = true;
  struct Frame {
    int v;
    size_t next;
  };
  std::vector<Frame> frames{{start, 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next < d.succ[f.v].size()) {
      int w = d.succ[f.v][f.next++];
      if (w == start && path.size() >= 1 && frames.size() >= 1) return path;
      if (visited[w] || comp[w] != comp[start]) continue;
      visited[w] = true;
      path.push_back(w);
      frames.push_back({w, 0});
    } else {
      visited[f.v] = false;
      path.pop_back();
      frames.pop_back();
    }
  }
  return std::nullopt;  // unreachable: a 2+-vertex SCC always carries a cycle
}

std::string depgraph_dot(const DependencyDigraph& d, const Poset& lattice,
                         const std::vector<int>* cycle) {
  std::map<std::pair<int, int>, bool> on_cycle;
  if (cycle)
    for (size_t i = 0; i < cycle->size(); ++i)
      on_cycle[{(*cycle)[i], (*cycle)[(i + 1) % cycle->size()]}] = true;

  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };

  std::string out = "digraph dependency {\n";
  for (int v = 0; v < d.n; ++v) {
    out += "  " + quote(lattice.label(v));
    out += d.subset.test(v) ? " [shape=box];\n" : " [shape=ellipse];\n";
  }
  for (const DepEdge& e : d.edges) {
    out += "  " + quote(lattice.label(e.tail)) + " -> " + quote(lattice.label(e.head));
    const char* style = e.kind == DepEdge::Kind::Inner   ? "solid"
                        : e.kind == DepEdge::Kind::Outer ? "dashed"
                                                         : "dotted";
    out += " [style=" + std::string(style);
    if (on_cycle.count({e.tail, e.head})) out += ",color=red,penwidth=2";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace seps
