#include "minionlab/simplex.hpp"

#include <stdexcept>

namespace minionlab {

namespace {

// Dense tableau: rows 0..m-1 hold the constraints, row m the objective
// (reduced costs of a minimization). Column layout: structural variables,
// then artificials, then the rhs column.
class Tableau {
 public:
  Tableau(const LpProblem& p)
      : m_(static_cast<unsigned>(p.rows.size())), n_(p.num_vars) {
    cols_ = n_ + m_ + 1;
    t_.assign(m_ + 1, std::vector<Rat>(cols_, Rat(0)));
    basis_.resize(m_);
    for (unsigned i = 0; i < m_; ++i) {
      bool flip = p.rhs[i] < 0;
      for (unsigned j = 0; j < n_; ++j)
        t_[i][j] = flip ? -p.rows[i][j] : p.rows[i][j];
      t_[i][cols_ - 1] = flip ? -p.rhs[i] : p.rhs[i];
      t_[i][n_ + i] = 1;  // artificial
      basis_[i] = n_ + i;
    }
  }

  // Phase 1: minimize the sum of artificials.
  bool phase1() {
    for (unsigned j = 0; j < cols_; ++j) {
      Rat s(0);
      for (unsigned i = 0; i < m_; ++i) s += t_[i][j];
      t_[m_][j] = -s;  // reduced costs of sum(artificials)
    }
    // artificials themselves start basic with reduced cost 0
    for (unsigned i = 0; i < m_; ++i) t_[m_][n_ + i] = 0;
    run();
    if (t_[m_][cols_ - 1] != 0) return false;  // positive infeasibility
    drive_out_artificials();
    return true;
  }

  // Phase 2: maximize c*x == minimize -c*x over structural variables.
  void phase2(const std::vector<Rat>& c) {
    for (unsigned j = 0; j < cols_; ++j) t_[m_][j] = 0;
    for (unsigned j = 0; j < n_; ++j) t_[m_][j] = -c[j];
    // price out the basis
    for (unsigned i = 0; i < m_; ++i) {
      unsigned b = basis_[i];
      if (t_[m_][b] == 0) continue;
      Rat f = t_[m_][b];
      for (unsigned j = 0; j < cols_; ++j) t_[m_][j] -= f * t_[i][j];
    }
    run();
  }

  std::vector<Rat> point() const {
    std::vector<Rat> x(n_, Rat(0));
    for (unsigned i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_ - 1];
    return x;
  }

  Rat objective_value(const std::vector<Rat>& c) const {
    std::vector<Rat> x = point();
    Rat v(0);
    for (unsigned j = 0; j < n_; ++j) v += c[j] * x[j];
    return v;
  }

 private:
  // Bland's rule throughout: smallest eligible column enters, smallest
  // basis index leaves among the minimum ratios.
  void run() {
    for (;;) {
      unsigned enter = cols_ - 1;
      for (unsigned j = 0; j < cols_ - 1; ++j) {
        if (artificial_banned_ && j >= n_ && j < n_ + m_) continue;
        if (t_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_ - 1) return;  // optimal
      unsigned leave = m_;
      Rat best;
      for (unsigned i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][cols_ - 1] / t_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_)
        throw std::runtime_error("LP unbounded; malformed relaxation");
      pivot(leave, enter);
    }
  }

  void pivot(unsigned row, unsigned col) {
    Rat inv = t_[row][col];
    for (unsigned j = 0; j < cols_; ++j) t_[row][j] /= inv;
    for (unsigned i = 0; i <= m_; ++i) {
      if (i == row) continue;
      if (t_[i][col] == 0) continue;
      Rat f = t_[i][col];
      for (unsigned j = 0; j < cols_; ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (unsigned i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      unsigned col = cols_ - 1;
      for (unsigned j = 0; j < n_; ++j)
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      if (col != cols_ - 1) pivot(i, col);
      // else: redundant row, keep the artificial at value 0
    }
    artificial_banned_ = true;
  }

  unsigned m_, n_, cols_;
  std::vector<std::vector<Rat>> t_;
  std::vector<unsigned> basis_;
  bool artificial_banned_ = false;
};

}  // namespace

LpResult lp_maximize(const LpProblem& p, const std::vector<Rat>& objective) {
  if (objective.size() != p.num_vars)
    throw std::invalid_argument("objective size mismatch");
  for (const auto& r : p.rows)
    if (r.size() != p.num_vars)
      throw std::invalid_argument("row size mismatch");
  LpResult res;
  if (p.rows.empty()) {
    // no constraints: only sensible when the objective is empty/zero
    res.feasible = true;
    res.point.assign(p.num_vars, Rat(0));
    res.objective = 0;
    return res;
  }
  Tableau t(p);
  if (!t.phase1()) return res;
  t.phase2(objective);
  res.feasible = true;
  res.point = t.point();
  res.objective = t.objective_value(objective);
  return res;
}

LpResult lp_feasible_point(const LpProblem& p) {
  return lp_maximize(p, std::vector<Rat>(p.num_vars, Rat(0)));
}

}  // namespace minionlab
