#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace latfeas {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Componentwise lattice operations of (R^N, <=). Every function is a pure
/// componentwise selection, so the algebraic identities (x = x+ - x-,
/// |x| = x+ + x-, join + meet = sum) hold bitwise in double precision.

inline void require_same_dim(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()));
}

/// Positive part x+; equals the nearest point of the lattice cone.
inline Vector pos_part(const Vector& x) { return x.cwiseMax(0.0); }

/// Negative part x-, so that x = pos_part(x) - neg_part(x).
inline Vector neg_part(const Vector& x) { return (-x).cwiseMax(0.0); }

/// Modulus |x| = pos_part(x) + neg_part(x).
inline Vector modulus(const Vector& x) { return x.cwiseAbs(); }

/// Componentwise supremum of {x, y}.
inline Vector join(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  return x.cwiseMax(y);
}

/// Componentwise infimum of {x, y}.
inline Vector meet(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  return x.cwiseMin(y);
}

}  // namespace latfeas
