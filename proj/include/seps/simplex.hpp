#pragma once

// Exact rational linear programming: dense two-phase simplex with Bland's
// rule, which guarantees termination. Instances here are desk-scale (at most
// a few hundred rows), so no effort is spent on sparsity or factorization.

#include <vector>

#include "seps/rational.hpp"

namespace seps {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Rel { Le, Ge, Eq };

struct LpRow {
  std::vector<std::pair<int, Rat>> terms;  // (variable, coefficient)
  Rel rel = Rel::Le;
  Rat rhs;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  std::vector<Rat> values;  // per structural variable, when Optimal
};

// maximize sum(objective) subject to rows and x >= 0.
LpSolution lp_maximize(int num_vars, const std::vector<LpRow>& rows,
                       const std::vector<std::pair<int, Rat>>& objective);

}  // namespace seps
