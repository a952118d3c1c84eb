#include "seps/simplex.hpp"

#include <cassert>

#include "seps/error.hpp"

namespace seps {

namespace {

// Dense tableau: rows m x (total columns + 1 rhs column). Basis column per
// row. Objective handled as an extra row kept in reduced form.
struct Tableau {
  int m = 0, cols = 0;
  std::vector<std::vector<Rat>> a;  // m rows, cols+1 entries (last = rhs)
  std::vector<int> basis;           // basic column of each row
  std::vector<Rat> obj;             // cols+1 entries; obj[cols] = -value

  void pivot(int row, int col) {
    Rat p = a[row][col];
    assert(!p.is_zero());
    for (int j = 0; j <= cols; ++j) a[row][j] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[row][j];
    }
    if (!obj[col].is_zero()) {
      Rat f = obj[col];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * a[row][j];
    }
    basis[row] = col;
  }

  // Bland: entering = least column with positive reduced cost; leaving = least
  // ratio, ties broken by least basis column. Returns false on unboundedness.
  bool run() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (Rat(0) < obj[j]) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (!(Rat(0) < a[i][enter])) continue;
        Rat ratio = a[i][cols] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution lp_maximize(int num_vars, const std::vector<LpRow>& rows,
                       const std::vector<std::pair<int, Rat>>& objective) {
  int m = int(rows.size());

  // Column layout: structural | slack/surplus | artificial.
  int slack_count = 0;
  for (const LpRow& r : rows)
    if (r.rel != Rel::Eq) ++slack_count;

  // Normalize to nonnegative rhs first to know which rows need artificials.
  std::vector<std::vector<Rat>> dense(m, std::vector<Rat>(num_vars, Rat(0)));
  std::vector<Rat> rhs(m);
  std::vector<Rel> rel(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [v, c] : rows[i].terms) {
      assert(v >= 0 && v < num_vars);
      dense[i][v] += c;
    }
    rhs[i] = rows[i].rhs;
    rel[i] = rows[i].rel;
    if (rhs[i].is_negative()) {
      for (Rat& c : dense[i]) c = -c;
      rhs[i] = -rhs[i];
      rel[i] = rel[i] == Rel::Le ? Rel::Ge : rel[i] == Rel::Ge ? Rel::Le : Rel::Eq;
    }
  }

  int artificial_count = 0;
  for (int i = 0; i < m; ++i)
    if (rel[i] != Rel::Le) ++artificial_count;

  Tableau t;
  t.m = m;
  t.cols = num_vars + slack_count + artificial_count;
  t.a.assign(m, std::vector<Rat>(t.cols + 1, Rat(0)));
  t.basis.assign(m, -1);
  t.obj.assign(t.cols + 1, Rat(0));

  int next_slack = num_vars;
  int next_art = num_vars + slack_count;
  std::vector<int> art_cols;
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < num_vars; ++v) t.a[i][v] = dense[i][v];
    t.a[i][t.cols] = rhs[i];
    switch (rel[i]) {
      case Rel::Le:
        t.a[i][next_slack] = Rat(1);
        t.basis[i] = next_slack++;
        break;
      case Rel::Ge:
        t.a[i][next_slack] = Rat(-1);
        ++next_slack;
        t.a[i][next_art] = Rat(1);
        t.basis[i] = next_art;
        art_cols.push_back(next_art++);
        break;
      case Rel::Eq:
        t.a[i][next_art] = Rat(1);
        t.basis[i] = next_art;
        art_cols.push_back(next_art++);
        break;
    }
  }

  LpSolution out;
  if (!art_cols.empty()) {
    // Phase 1: maximize -(sum of artificials), expressed in reduced form by
    // adding every artificial-basic row into the objective.
    for (int c : art_cols) t.obj[c] = Rat(-1);
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= num_vars + slack_count)
        for (int j = 0; j <= t.cols; ++j) t.obj[j] += t.a[i][j];
    bool bounded = t.run();
    assert(bounded);
    (void)bounded;
    if (!(-t.obj[t.cols] == Rat(0))) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Pivot remaining artificials out of the basis where possible. A row
    // where that fails has an all-zero structural part (it was linearly
    // dependent), so it can be dropped outright.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < num_vars + slack_count) continue;
      for (int j = 0; j < num_vars + slack_count; ++j)
        if (!t.a[i][j].is_zero()) {
          t.pivot(i, j);
          break;
        }
    }
    // Truncate the artificial columns so phase 2 cannot touch them.
    int real_cols = num_vars + slack_count;
    std::vector<std::vector<Rat>> kept_rows;
    std::vector<int> kept_basis;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= real_cols) continue;
      std::vector<Rat> row(t.a[i].begin(), t.a[i].begin() + real_cols);
      row.push_back(t.a[i][t.cols]);
      kept_rows.push_back(std::move(row));
      kept_basis.push_back(t.basis[i]);
    }
    t.a = std::move(kept_rows);
    t.basis = std::move(kept_basis);
    t.m = m = int(t.a.size());
    t.cols = real_cols;
  }

  // Phase 2 objective in reduced form.
  t.obj.assign(t.cols + 1, Rat(0));
  for (const auto& [v, c] : objective) {
    assert(v >= 0 && v < num_vars);
    t.obj[v] += c;
  }
  for (int i = 0; i < m; ++i)
    if (!t.obj[t.basis[i]].is_zero()) {
      Rat f = t.obj[t.basis[i]];
      for (int j = 0; j <= t.cols; ++j) t.obj[j] -= f * t.a[i][j];
    }

  if (!t.run()) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.objective = -t.obj[t.cols];
  out.values.assign(num_vars, Rat(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < num_vars) out.values[t.basis[i]] = t.a[i][t.cols];
  return out;
}

}  // namespace seps
