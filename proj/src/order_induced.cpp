#include "seps/order_induced.hpp"

#include <algorithm>
#include <set>

#include "seps/error.hpp"
#include "seps/simplex.hpp"

namespace seps {

std::optional<std::pair<int, int>> find_submodularity_violation(const Poset& lattice,
                                                                const std::vector<Rat>& f) {
  int n = lattice.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!lattice.incomparable(a, b)) continue;  // comparable pairs hold with equality
      if (f[a] + f[b] < f[lattice.join(a, b)] + f[lattice.meet(a, b)])
        return std::make_pair(a, b);
    }
  return std::nullopt;
}

OrderInducedResult find_inducing_function(const Poset& lattice, const Bitset& subset,
                                          bool symmetric, const std::vector<int>* inv) {
  if (!lattice.is_lattice())
    throw Error(ErrorKind::NotALattice, "order-induced submodularity needs a lattice");
  int n = lattice.size();
  if (symmetric) {
    if (!inv)
      throw Error(ErrorKind::InvolutionRequired,
                  "symmetric witness requested without an involution");
    SepSystem check(lattice, *inv);  // also validates the permutation shape
    Report r = check.validate();
    if (!r.ok())
      throw Error(ErrorKind::InvalidInvolutionPoset, r.problems.front());
    Report sub = validate_subsystem(check, subset);
    if (!sub.ok())
      throw Error(ErrorKind::InvalidInvolutionPoset, sub.problems.front());
  }

  // Degenerate subsets have canonical witnesses.
  if (subset.none()) {
    InducedWitness w{std::vector<Rat>(n, Rat(1)), Rat(1), symmetric};
    return {w};
  }
  if (subset.count() == n) {
    InducedWitness w{std::vector<Rat>(n, Rat(0)), Rat(1), symmetric};
    return {w};
  }

  // Variables: one per element (or per involution orbit when symmetric),
  // plus the slack delta as the last variable. Constraints:
  //   f(s) + delta <= 1   for s in P
  //   f(a)         >= 1   for a not in P
  //   delta        <= 1
  //   f(a v b) + f(a ^ b) - f(a) - f(b) <= 0    (added lazily on violation)
  // maximize delta. (1, ..., 1, 0) is always feasible, so the LP is never
  // infeasible, and delta <= 1 bounds it. The subset is order-induced iff the
  // optimum is positive: a relaxation optimum of 0 already caps the full
  // system, and a positive optimum whose f passes the full pairwise scan is a
  // witness outright.
  std::vector<int> var_of(n);
  int num_f_vars = 0;
  if (symmetric) {
    std::vector<int> orbit_var(n, -1);
    for (int s = 0; s < n; ++s) {
      int rep = std::min(s, (*inv)[s]);
      if (orbit_var[rep] < 0) orbit_var[rep] = num_f_vars++;
      var_of[s] = orbit_var[rep];
    }
  } else {
    num_f_vars = n;
    for (int s = 0; s < n; ++s) var_of[s] = s;
  }
  int delta = num_f_vars;

  std::vector<LpRow> rows;
  std::set<int> member_vars, nonmember_vars;
  for (int s = subset.first(); s >= 0; s = subset.next(s)) member_vars.insert(var_of[s]);
  for (int a = 0; a < n; ++a)
    if (!subset.test(a)) nonmember_vars.insert(var_of[a]);
  for (int v : member_vars) rows.push_back({{{v, Rat(1)}, {delta, Rat(1)}}, Rel::Le, Rat(1)});
  for (int v : nonmember_vars) rows.push_back({{{v, Rat(1)}}, Rel::Ge, Rat(1)});
  rows.push_back({{{delta, Rat(1)}}, Rel::Le, Rat(1)});

  auto cut_for = [&](int a, int b) {
    std::vector<Rat> coeff(num_f_vars, Rat(0));
    coeff[var_of[lattice.join(a, b)]] += Rat(1);
    coeff[var_of[lattice.meet(a, b)]] += Rat(1);
    coeff[var_of[a]] -= Rat(1);
    coeff[var_of[b]] -= Rat(1);
    LpRow row;
    for (int v = 0; v < num_f_vars; ++v)
      if (!coeff[v].is_zero()) row.terms.emplace_back(v, coeff[v]);
    row.rel = Rel::Le;
    row.rhs = Rat(0);
    return row;
  };

  std::set<std::pair<int, int>> cut_pairs;
  std::vector<std::pair<int, Rat>> objective{{delta, Rat(1)}};
  while (true) {
    LpSolution sol = lp_maximize(num_f_vars + 1, rows, objective);
    if (sol.status != LpStatus::Optimal)
      throw Error(ErrorKind::InternalContradiction, "separation LP must be solvable");
    if (sol.objective == Rat(0)) return {std::nullopt};

    std::vector<Rat> f(n);
    for (int s = 0; s < n; ++s) f[s] = sol.values[var_of[s]];
    bool clean = true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (!lattice.incomparable(a, b)) continue;
        if (f[a] + f[b] < f[lattice.join(a, b)] + f[lattice.meet(a, b)]) {
          clean = false;
          if (cut_pairs.insert({a, b}).second) rows.push_back(cut_for(a, b));
        }
      }
    if (clean) {
      InducedWitness w{std::move(f), Rat(1), symmetric};
      return {w};
    }
  }
}

WitnessCheck verify_witness(const Poset& lattice, const Bitset& subset,
                            const InducedWitness& w, const std::vector<int>* inv) {
  WitnessCheck out;
  int n = lattice.size();
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.violations.push_back(std::move(msg));
  };
  if (int(w.values.size()) != n) {
    fail("value count mismatch");
    return out;
  }
  if (!(Rat(0) < w.threshold)) fail("threshold is not positive");
  for (int a = 0; a < n; ++a)
    if (w.values[a].is_negative()) fail("negative value at '" + lattice.label(a) + "'");
  for (int a = 0; a < n; ++a) {
    bool in = subset.test(a);
    if (in && !(w.values[a] < w.threshold))
      fail("member '" + lattice.label(a) + "' not below the threshold");
    if (!in && w.values[a] < w.threshold)
      fail("non-member '" + lattice.label(a) + "' below the threshold");
  }
  if (auto viol = find_submodularity_violation(lattice, w.values))
    fail("submodularity fails for '" + lattice.label(viol->first) + "', '" +
         lattice.label(viol->second) + "'");
  if (w.symmetric) {
    if (!inv) {
      fail("symmetric witness but no involution to check against");
    } else {
      for (int s = 0; s < n; ++s)
        if (!(w.values[s] == w.values[(*inv)[s]])) {
          fail("asymmetric at '" + lattice.label(s) + "'");
          break;
        }
    }
  }
  return out;
}

namespace {

std::vector<Rat> symmetrize(const Universe& u, const std::vector<Rat>& f, bool mean) {
  if (int(f.size()) != u.size())
    throw Error(ErrorKind::InputNotSubmodular, "valuation size mismatch");
  if (auto viol = find_submodularity_violation(u.poset(), f))
    throw Error(ErrorKind::InputNotSubmodular,
                "input valuation is not submodular at '" +
                    u.poset().label(viol->first) + "', '" +
                    u.poset().label(viol->second) + "'");
  std::vector<Rat> g(f.size());
  for (int s = 0; s < u.size(); ++s) {
    g[s] = f[s] + f[u.inv(s)];
    if (mean) g[s] = g[s] / Rat(2);
  }
  return g;
}

}  // namespace

std::vector<Rat> symmetrize_sum(const Universe& u, const std::vector<Rat>& f) {
  return symmetrize(u, f, false);
}

std::vector<Rat> symmetrize_mean(const Universe& u, const std::vector<Rat>& f) {
  return symmetrize(u, f, true);
}

}  // namespace seps
