#include "afgr/lp.hpp"

#include <cstddef>

#include "afgr/error.hpp"

namespace afgr {

namespace {

struct Tableau {
  // rows_ x (cols_ + 1); last column is the right-hand side.
  RatMatrix t;
  std::vector<Rational> cost;  // reduced costs, last entry = -objective
  std::vector<int> basis;
  int cols = 0;

  void pivot(int r, int c) {
    const Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    if (cost[c] != 0) {
      const Rational f = cost[c];
      for (int j = 0; j <= cols; ++j) cost[j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Returns false when unbounded. Only columns with allowed[j] may enter.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (allowed[j] && cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_standard_lp(const RatMatrix& A, const std::vector<Rational>& b,
                           const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw DomainError("lp: row count mismatch");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) throw DomainError("lp: column count mismatch");

  // Phase I: artificials n .. n+m-1, rows sign-normalized so b >= 0.
  Tableau tab;
  tab.cols = n + m;
  std::vector<int> sign(m, 1);
  tab.t.assign(m, std::vector<Rational>(n + m + 1));
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (int j = 0; j < n; ++j) tab.t[i][j] = sign[i] * A[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = sign[i] * b[i];
  }
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) tab.basis[i] = n + i;
  tab.cost.assign(n + m + 1, Rational(0));
  for (int j = n; j < n + m; ++j) tab.cost[j] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n + m; ++j) tab.cost[j] -= tab.t[i][j];

  std::vector<bool> all(n + m, true);
  tab.optimize(all);

  LpResult res;
  const Rational phase1 = -tab.cost[n + m];
  if (phase1 > 0) {
    res.status = LpStatus::Infeasible;
    res.farkas.resize(m);
    // Dual of the phase-I problem: u_i = 1 - reduced cost of artificial i.
    for (int i = 0; i < m; ++i) res.farkas[i] = sign[i] * (1 - tab.cost[n + i]);
    return res;
  }

  // Drive zero-level artificials out of the basis, dropping redundant rows.
  for (int i = 0; i < static_cast<int>(tab.t.size());) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      tab.pivot(i, col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + i);
      tab.basis.erase(tab.basis.begin() + i);
    }
  }

  // Phase II.
  tab.cost.assign(n + m + 1, Rational(0));
  for (int j = 0; j < n; ++j) tab.cost[j] = c[j];
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    const int bj = tab.basis[i];
    if (tab.cost[bj] == 0) continue;
    const Rational f = tab.cost[bj];
    for (int j = 0; j <= n + m; ++j) tab.cost[j] -= f * tab.t[i][j];
  }
  std::vector<bool> structural(n + m, false);
  for (int j = 0; j < n; ++j) structural[j] = true;
  if (!tab.optimize(structural)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][n + m];
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

bool verify_farkas(const RatMatrix& A, const std::vector<Rational>& b,
                   const std::vector<Rational>& y) {
  if (y.size() != b.size()) return false;
  Rational by = 0;
  for (std::size_t i = 0; i < b.size(); ++i) by += b[i] * y[i];
  if (by <= 0) return false;
  const std::size_t n = A.empty() ? 0 : A[0].size();
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < A.size(); ++i) s += A[i][j] * y[i];
    if (s > 0) return false;
  }
  return true;
}

int LinearProgram::add_variable(bool nonnegative) {
  nonneg_.push_back(nonnegative);
  return static_cast<int>(nonneg_.size()) - 1;
}

void LinearProgram::add_constraint(const std::vector<std::pair<int, Rational>>& terms,
                                   Sense sense, const Rational& rhs) {
  rows_.push_back({terms, sense, rhs});
}

void LinearProgram::set_objective(const std::vector<std::pair<int, Rational>>& terms,
                                  bool maximize) {
  objective_ = terms;
  maximize_ = maximize;
}

LinearProgram::Solution LinearProgram::solve() const {
  // Column layout: each variable gets a + column; free ones also a - column;
  // then one slack per inequality row.
  std::vector<int> pos(nonneg_.size()), neg(nonneg_.size(), -1);
  int cols = 0;
  for (std::size_t v = 0; v < nonneg_.size(); ++v) {
    pos[v] = cols++;
    if (!nonneg_[v]) neg[v] = cols++;
  }
  std::vector<int> slack(rows_.size(), -1);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].sense != Sense::Eq) slack[r] = cols++;

  Solution sol;
  sol.A.assign(rows_.size(), std::vector<Rational>(cols));
  sol.b.resize(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [v, coef] : rows_[r].terms) {
      sol.A[r][pos[v]] += coef;
      if (neg[v] >= 0) sol.A[r][neg[v]] -= coef;
    }
    if (rows_[r].sense == Sense::Le) sol.A[r][slack[r]] = 1;
    if (rows_[r].sense == Sense::Ge) sol.A[r][slack[r]] = -1;
    sol.b[r] = rows_[r].rhs;
  }
  std::vector<Rational> c(cols);
  for (const auto& [v, coef] : objective_) {
    const Rational k = maximize_ ? Rational(-coef) : coef;
    c[pos[v]] += k;
    if (neg[v] >= 0) c[neg[v]] -= k;
  }
  LpResult r = solve_standard_lp(sol.A, sol.b, c);
  sol.status = r.status;
  sol.farkas = std::move(r.farkas);
  if (r.status == LpStatus::Optimal) {
    sol.value = maximize_ ? Rational(-r.value) : r.value;
    sol.x.resize(nonneg_.size());
    for (std::size_t v = 0; v < nonneg_.size(); ++v) {
      sol.x[v] = r.x[pos[v]];
      if (neg[v] >= 0) sol.x[v] -= r.x[neg[v]];
    }
  }
  return sol;
}

}  // namespace afgr
