#include "latfeas/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace latfeas {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr int kIterationCap = 20000;

// Constraint rows plus one objective row kept in reduced-cost form for
// maximization; the last column carries b (and minus the objective value).
struct Tableau {
  Matrix t;  // (m+1) x (cols+1)
  std::vector<Index> basis;
  Index m = 0;
  Index cols = 0;

  double obj_value() const { return t(m, cols); }

  void pivot(Index row, Index col) {
    t.row(row) /= t(row, col);
    for (Index r = 0; r <= m; ++r) {
      if (r == row) continue;
      const double f = t(r, col);
      if (f != 0.0) t.row(r) -= f * t.row(row);
    }
    basis[static_cast<size_t>(row)] = col;
  }

  // One Bland step: entering = lowest-index column with positive reduced
  // cost, leaving = min-ratio row with ties broken by lowest basis index.
  // Returns false at optimality; sets *unbounded when no row limits the step.
  bool step(Index limit_cols, bool* unbounded) {
    Index enter = -1;
    for (Index j = 0; j < limit_cols; ++j) {
      if (t(m, j) > kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;
    Index leave = -1;
    double best_ratio = 0.0;
    for (Index r = 0; r < m; ++r) {
      if (t(r, enter) > kPivotEps) {
        const double ratio = t(r, cols) / t(r, enter);
        if (leave < 0 || ratio < best_ratio - kPivotEps ||
            (std::abs(ratio - best_ratio) <= kPivotEps &&
             basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(leave)])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

  void iterate(Index limit_cols, bool* unbounded) {
    int iters = 0;
    while (step(limit_cols, unbounded)) {
      if (++iters > kIterationCap) throw std::runtime_error("solve_lp: iteration cap exceeded");
    }
  }
};

}  // namespace

LpResult solve_lp(const Matrix& a, const Vector& b, const Vector& c) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("solve_lp: shape mismatch");

  Tableau tab;
  tab.m = m;
  tab.cols = n + m;  // structural then artificial
  tab.t = Matrix::Zero(m + 1, tab.cols + 1);
  tab.basis.resize(static_cast<size_t>(m));
  for (Index r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    tab.t.block(r, 0, 1, n) = sign * a.row(r);
    tab.t(r, n + r) = 1.0;
    tab.t(r, tab.cols) = sign * b[r];
    tab.basis[static_cast<size_t>(r)] = n + r;
  }

  // Phase 1: maximize -(sum of artificials). In reduced-cost form that is
  // the sum of the constraint rows over the structural columns.
  for (Index r = 0; r < m; ++r) tab.t.row(m) += tab.t.row(r);
  tab.t.block(m, n, 1, m).setZero();

  bool unbounded = false;
  tab.iterate(tab.cols, &unbounded);
  if (tab.obj_value() > kPivotEps) return {LpStatus::infeasible, 0.0, Vector()};

  // Drive artificial variables out of the basis where a structural pivot
  // exists; rows without one are redundant and stay inert at value zero.
  for (Index r = 0; r < m; ++r) {
    if (tab.basis[static_cast<size_t>(r)] < n) continue;
    for (Index j = 0; j < n; ++j) {
      if (std::abs(tab.t(r, j)) > kPivotEps) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2: reduced costs of c relative to the current basis.
  tab.t.row(m).setZero();
  tab.t.block(m, 0, 1, n) = c.transpose();
  for (Index r = 0; r < m; ++r) {
    const Index bv = tab.basis[static_cast<size_t>(r)];
    if (bv < n && c[bv] != 0.0) tab.t.row(m) -= c[bv] * tab.t.row(r);
  }

  unbounded = false;
  tab.iterate(n, &unbounded);
  if (unbounded) return {LpStatus::unbounded, 0.0, Vector()};

  Vector x = Vector::Zero(n);
  for (Index r = 0; r < m; ++r) {
    const Index bv = tab.basis[static_cast<size_t>(r)];
    if (bv < n) x[bv] = tab.t(r, tab.cols);
  }
  return {LpStatus::optimal, -tab.obj_value(), std::move(x)};
}

}  // namespace latfeas
