#include "paley/rational_lp.hpp"

#include <limits>

#include "paley/error.hpp"

namespace paley {

void RationalLP::validate() const {
  if (!free_var.empty() && free_var.size() != num_vars)
    throw Error(Errc::dimension_mismatch, "free_var size differs from num_vars");
  if (objective.size() != num_vars)
    throw Error(Errc::dimension_mismatch, "objective size differs from num_vars");
  for (const auto& row : constraints)
    if (row.coeffs.size() != num_vars)
      throw Error(Errc::dimension_mismatch, "constraint size differs from num_vars");
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::vector<std::vector<Rational>> a;  // m x n
  std::vector<Rational> b;               // m, kept >= 0
  std::vector<std::size_t> basis;        // m

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a.front().size(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols(); ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }
};

// Maximizes <cost, x> over the tableau's current feasible basis, using only
// columns with allowed[j]. Returns false when unbounded.
bool maximize(Tableau& t, const std::vector<Rational>& cost,
              const std::vector<bool>& allowed) {
  const std::size_t m = t.rows();
  const std::size_t n = t.cols();
  while (true) {
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < n && enter == kNone; ++j) {
      if (!allowed[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < m; ++i)
        if (t.a[i][j] != 0) reduced -= cost[t.basis[i]] * t.a[i][j];
      if (reduced > 0) enter = j;
    }
    if (enter == kNone) return true;

    std::size_t leave = kNone;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.a[i][enter] <= 0) continue;
      Rational ratio = t.b[i] / t.a[i][enter];
      if (leave == kNone || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == kNone) return false;
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult lp_solve(const RationalLP& lp) {
  lp.validate();
  const std::size_t nv = lp.num_vars;
  const auto is_free = [&](std::size_t j) { return !lp.free_var.empty() && lp.free_var[j]; };

  // Column layout: structural (free variables split into +/- parts), then
  // slack/surplus, then artificial.
  std::vector<std::size_t> pos_col(nv), neg_col(nv, kNone);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos_col[j] = ncols++;
    if (is_free(j)) neg_col[j] = ncols++;
  }

  const std::size_t m = lp.constraints.size();
  std::vector<int> slack_sign(m, 0);
  std::vector<std::size_t> slack_col(m, kNone), art_col(m, kNone);
  std::vector<Rational> rhs(m);
  std::vector<bool> flip(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    RowSense sense = row.sense;
    rhs[i] = row.rhs;
    if (rhs[i] < 0) {
      flip[i] = true;
      rhs[i] = -rhs[i];
      if (sense == RowSense::less_equal) sense = RowSense::greater_equal;
      else if (sense == RowSense::greater_equal) sense = RowSense::less_equal;
    }
    if (sense == RowSense::less_equal) slack_sign[i] = 1;
    if (sense == RowSense::greater_equal) slack_sign[i] = -1;
    if (slack_sign[i] != 0) slack_col[i] = ncols++;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (slack_sign[i] != 1) art_col[i] = ncols++;

  Tableau t;
  t.a.assign(m, std::vector<Rational>(ncols, 0));
  t.b = rhs;
  t.basis.assign(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    for (std::size_t j = 0; j < nv; ++j) {
      Rational v = flip[i] ? Rational(-row.coeffs[j]) : row.coeffs[j];
      t.a[i][pos_col[j]] = v;
      if (neg_col[j] != kNone) t.a[i][neg_col[j]] = -v;
    }
    if (slack_col[i] != kNone) t.a[i][slack_col[i]] = slack_sign[i];
    if (art_col[i] != kNone) {
      t.a[i][art_col[i]] = 1;
      t.basis[i] = art_col[i];
    } else {
      t.basis[i] = slack_col[i];
    }
  }

  std::vector<bool> is_art(ncols, false);
  for (std::size_t i = 0; i < m; ++i)
    if (art_col[i] != kNone) is_art[art_col[i]] = true;

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(ncols, 0);
  bool any_art = false;
  for (std::size_t j = 0; j < ncols; ++j)
    if (is_art[j]) {
      phase1[j] = -1;
      any_art = true;
    }
  std::vector<bool> allowed_all(ncols, true);
  if (any_art) {
    maximize(t, phase1, allowed_all);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (is_art[t.basis[i]]) infeas += t.b[i];
    if (infeas > 0) return {LpStatus::infeasible, std::nullopt};

    // Drive remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are redundant and dropped.
    for (std::size_t i = 0; i < t.rows();) {
      if (!is_art[t.basis[i]]) {
        ++i;
        continue;
      }
      std::size_t c = kNone;
      for (std::size_t j = 0; j < ncols && c == kNone; ++j)
        if (!is_art[j] && t.a[i][j] != 0) c = j;
      if (c != kNone) {
        t.pivot(i, c);
        ++i;
      } else {
        t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
        t.b.erase(t.b.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> phase2(ncols, 0);
  for (std::size_t j = 0; j < nv; ++j) {
    phase2[pos_col[j]] = lp.objective[j];
    if (neg_col[j] != kNone) phase2[neg_col[j]] = -lp.objective[j];
  }
  std::vector<bool> allowed(ncols);
  for (std::size_t j = 0; j < ncols; ++j) allowed[j] = !is_art[j];
  if (!maximize(t, phase2, allowed)) return {LpStatus::unbounded, std::nullopt};

  std::vector<Rational> col_value(ncols, 0);
  for (std::size_t i = 0; i < t.rows(); ++i) col_value[t.basis[i]] = t.b[i];
  LpSolution sol;
  sol.x.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    sol.x[j] = col_value[pos_col[j]];
    if (neg_col[j] != kNone) sol.x[j] -= col_value[neg_col[j]];
  }
  sol.value = 0;
  for (std::size_t j = 0; j < nv; ++j) sol.value += lp.objective[j] * sol.x[j];
  return {LpStatus::optimal, std::move(sol)};
}

}  // namespace paley
