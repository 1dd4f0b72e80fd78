#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <utility>
#include <variant>

#include "latfeas/lattice.hpp"

namespace latfeas {

/// The nonnegative orthant R^N_+ (the lattice cone). Self-dual: its negative
/// polar is -R^N_+.
struct LatticeCone {
  Index dim = 0;
};

/// Affine subspace A = {x : T x = rhs} described by M linearly independent
/// rows t_1..t_M of T. The Gram matrix T T^* is factorized once at
/// construction; a reciprocal-condition-number guard of 1e-12 rejects
/// dependent rows.
class AffineSubspace {
 public:
  AffineSubspace(Matrix rows, Vector rhs);

  Index dim() const { return rows_.cols(); }
  Index codim() const { return rows_.rows(); }
  const Matrix& rows() const { return rows_; }
  const Vector& rhs() const { return rhs_; }

  /// The canonical point x_bar = T^*(TT^*)^{-1} rhs of A.
  const Vector& particular_point() const { return xbar_; }

  /// Nearest point: x + T^*(TT^*)^{-1}(rhs - T x).
  Vector project(const Vector& x) const;

  /// 2 project(x) - x.
  Vector reflect(const Vector& x) const;

  /// Apply the orthogonal projector Q = T^*(TT^*)^{-1}T onto span{t_1..t_M}.
  Vector apply_Q(const Vector& z) const;

  /// Dense Q as an N x N matrix (symmetric idempotent).
  Matrix projector() const;

  /// ||T x - rhs||, the constraint residual.
  double residual(const Vector& x) const;

 private:
  Matrix rows_;  // M x N
  Vector rhs_;   // M
  Eigen::LLT<Matrix> gram_llt_;
  Vector xbar_;
};

/// Finitely generated cone {sum lambda_i s_i : lambda >= 0} with linearly
/// independent unit generators (columns of the generator matrix).
class SimplicialCone {
 public:
  explicit SimplicialCone(Matrix generators);

  Index dim() const { return gens_.rows(); }
  Index generator_count() const { return gens_.cols(); }
  const Matrix& generators() const { return gens_; }

  /// Nearest point, computed by active-set nonnegative least squares over the
  /// generator coefficients. Throws if the iteration cap is exceeded.
  Vector project(const Vector& x) const;

  /// Same as project, also reporting the nonnegative coefficient vector.
  Vector project(const Vector& x, Vector& coeffs_out) const;

  /// Unconstrained coordinates of x in the generator basis (least squares;
  /// exact when x lies in the span).
  Vector coordinates(const Vector& x) const;

 private:
  Matrix gens_;  // N x k
  Matrix gram_;  // k x k
};

/// Linear span of a set of linearly independent generators (columns).
class Span {
 public:
  explicit Span(Matrix generators);

  Index dim() const { return gens_.rows(); }
  const Matrix& generators() const { return gens_; }

  /// Orthogonal projection G (G^T G)^{-1} G^T x.
  Vector project(const Vector& x) const;

 private:
  Matrix gens_;
  Eigen::LLT<Matrix> gram_llt_;
};

/// Cone variants: usable as the set S of a feasibility instance and under
/// polar decomposition.
using ConeSpec = std::variant<LatticeCone, SimplicialCone, Span>;

/// Negative polar of a cone; projections go through Moreau subtraction
/// (P_polar x = x - P_cone x) rather than generator enumeration.
struct PolarOf {
  ConeSpec cone;
};

/// Any projectable/reflectable set handled by this library.
using ConvexSetSpec =
    std::variant<LatticeCone, AffineSubspace, SimplicialCone, Span, PolarOf>;

Index dim_of(const ConeSpec& cone);
Index dim_of(const ConvexSetSpec& set);

Vector project(const ConeSpec& cone, const Vector& x);
Vector project(const ConvexSetSpec& set, const Vector& x);

/// Projection onto the negative polar cone via Moreau decomposition.
Vector project_polar(const ConeSpec& cone, const Vector& x);

Vector reflect(const ConeSpec& cone, const Vector& x);
Vector reflect(const ConvexSetSpec& set, const Vector& x);

double dist(const ConeSpec& cone, const Vector& x);
double dist(const ConvexSetSpec& set, const Vector& x);

/// Reformulate the half-space {x : <a, x> <= b} against R^N_+ as an equality
/// constrained pair in R^{N+1} with a slack coordinate: returns
/// ({(x, y) : <a, x> + y = b}, R^{N+1}_+).
std::pair<AffineSubspace, LatticeCone> lift_halfspace(const Vector& a, double b);

}  // namespace latfeas
