#pragma once

#include "latfeas/lattice.hpp"

namespace latfeas {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  Vector x;
};

/// maximize c^T x subject to A x = b, x >= 0.
/// Dense two-phase tableau simplex with Bland's rule (anti-cycling); sized
/// for desk-scale problems where determinism matters more than speed.
LpResult solve_lp(const Matrix& a, const Vector& b, const Vector& c);

}  // namespace latfeas
