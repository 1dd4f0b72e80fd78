#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "latfeas/sets.hpp"

namespace latfeas {

/// Relaxation triple of the relaxed Douglas-Rachford family
/// T = c I + (1-c) R_A^b R_S^a with R^a = a I + (1-a) R. All three lie in
/// [0, 1). (0, 0, 1/2) recovers Douglas-Rachford, (1/2, 1/2, 0) alternating
/// projections.
struct AlgorithmParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.5;

  static AlgorithmParams dr() { return {0.0, 0.0, 0.5}; }
  static AlgorithmParams map() { return {0.5, 0.5, 0.0}; }

  /// tau = 2(1-b)(1-c), the scale of the Q-image term.
  double tau() const { return 2.0 * (1.0 - b) * (1.0 - c); }

  /// 2(1-a)(1-c), the scale of the polar-cone step.
  double kappa_scale() const { return 2.0 * (1.0 - a) * (1.0 - c); }

  void validate() const;
};

enum class Method { map, dr, relaxed };

struct MethodSpec {
  Method kind = Method::dr;
  AlgorithmParams params = AlgorithmParams::dr();

  static MethodSpec map() { return {Method::map, AlgorithmParams::map()}; }
  static MethodSpec dr() { return {Method::dr, AlgorithmParams::dr()}; }
  static MethodSpec relaxed(const AlgorithmParams& p) { return {Method::relaxed, p}; }
};

/// One step of the iteration x_n = x_{n-1} - kappa_n + Q lambda_n.
/// Vector fields are left empty when the run stores norms only.
struct StepRecord {
  int n = 0;
  Vector x;
  Vector kappa;       // kappa_n, an element of S^-
  Vector lambda_img;  // Q lambda_n
  Vector sigma;       // sum of kappa_1..kappa_n
  Vector alpha_img;   // Q alpha_n = sum of Q lambda_1..Q lambda_n
  double norm_x = 0.0;
  double norm_alpha_img = 0.0;
  double dist_S = 0.0;
  double dist_A = 0.0;
  double fejer_dist = std::numeric_limits<double>::quiet_NaN();
};

enum class StopReason { converged, finite_termination, max_iters, diverged };

std::string to_string(StopReason r);

struct IterationTrace {
  std::vector<StepRecord> records;
  StopReason stop_reason = StopReason::max_iters;
  Vector final_point;
  int diverged_index = -1;  // >= 0 only when stop_reason == diverged
};

struct RunOptions {
  int max_iters = 1000;
  double tol = 1e-9;
  /// A known fixed point; when present the per-step distance to it is
  /// recorded (it is nonincreasing by Fejer monotonicity).
  std::optional<Vector> reference_point{};
  /// When false, records keep only the scalar columns.
  bool store_vectors = true;
  /// When false, run exactly max_iters steps (divergence aside); used for
  /// fixed-length observation runs.
  bool stop_early = true;
};

Vector step_map(const ConeSpec& cone, const AffineSubspace& affine, const Vector& x);
Vector step_dr(const ConeSpec& cone, const AffineSubspace& affine, const Vector& x);

/// Operator-composition form c x + (1-c) R_A^b R_S^a x.
Vector step_relaxed(const AlgorithmParams& p, const ConeSpec& cone,
                    const AffineSubspace& affine, const Vector& x);

/// Closed-form expansion x - 2(1-a)(1-c) P_polar x + 2(1-b)(1-c) Q(xbar - R_S^a x);
/// agrees with step_relaxed up to rounding.
Vector step_relaxed_expansion(const AlgorithmParams& p, const ConeSpec& cone,
                              const AffineSubspace& affine, const Vector& x);

/// Drive the chosen method from x0, recording each step. Stops with
///   converged          once ||x_{n+1} - x_n|| <= tol,
///   finite_termination once the sequence is numerically constant for two
///                      consecutive steps after having moved, with the shadow
///                      P_S x_n feasible within tol,
///   diverged           on a non-finite iterate,
///   max_iters          otherwise.
IterationTrace run(const MethodSpec& method, const ConeSpec& cone,
                   const AffineSubspace& affine, const Vector& x0,
                   const RunOptions& opts = {});

/// ||(x_n - x_0) - (-sigma_n + Q alpha_n)|| at record n.
double telescope_residual(const IterationTrace& trace, size_t n);

struct RecessionDiagnostic {
  std::vector<Vector> directions;  // unit cluster representatives
  bool in_cone = false;            // every representative lies in S^- within tol
};

/// Cluster the normalized Q alpha_n over steps with ||Q alpha_n|| > tol
/// (greedy agglomeration, angular threshold 1e-3 rad) and report whether all
/// cluster directions lie in K = S^-. Requires a trace with stored vectors.
RecessionDiagnostic recession_diagnostic(const ConeSpec& cone, const IterationTrace& trace,
                                         double tol = 1e-9);

/// Residual of the membership identity
///   (x_{n+1} + (tau-1) x_n - 2(1-a)(1-c)(1-2b) P_polar x_n) / tau  in  A,
/// measured as ||T p - rhs||. With the Douglas-Rachford preset this is the
/// point x_{n+1} - P_polar x_n. Vanishes (to rounding) on genuine steps of
/// the named method.
double dr_affine_membership_residual(const ConeSpec& cone, const AffineSubspace& affine,
                                     const Vector& x_prev, const Vector& x_next,
                                     const AlgorithmParams& p = AlgorithmParams::dr());

}  // namespace latfeas
