#pragma once

#include <optional>
#include <vector>

#include "latfeas/iterate.hpp"
#include "latfeas/sets.hpp"

namespace latfeas {

/// Hyperplane-versus-orthant instance with the solution pinned at the
/// origin: A = {x : <a, x> = 0}, S = R^N_+, started at alpha0 (e_m - a_m a).
/// The alternating-projection iterates have the closed form
/// alpha0 (1 - a_m^2)^n (e_m - a_m a); there is no uniform linear rate over
/// the family as a_m shrinks.
struct Ex41Config {
  Vector a;          // unit vector, all entries strictly inside (0, 1)
  Index m = 0;       // distinguished coordinate
  double alpha0 = 1.0;

  void validate() const;
  double a_m() const { return a[m]; }
  /// Exact per-step contraction factor 1 - a_m^2.
  double rate() const { return 1.0 - a[m] * a[m]; }
};

/// Two-coordinate embedding (a_m, sqrt(1 - a_m^2)) with m = 0.
Ex41Config make_ex41(double a_m, double alpha0);

Vector ex41_closed_form(const Ex41Config& cfg, int n);
AffineSubspace ex41_affine(const Ex41Config& cfg);
Vector ex41_start(const Ex41Config& cfg);

/// State of the Douglas-Rachford coefficient recurrence
///   alpha' = alpha - a_m beta,  beta' = a_m alpha + (1 - 2 a_m^2) beta,
/// with beta_0 = alpha0 a_m, describing the iterates alpha_n e_m - beta_n a
/// while alpha_n - beta_n a_m stays positive.
struct Ex42State {
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;
};

struct Ex42Result {
  std::vector<Ex42State> states;
  /// First index with alpha <= 0 (its state is included), when reached.
  std::optional<int> first_nonpositive{};
};

/// Requires 0 < a_m with a_m^2 < 1/2 and alpha0 > 0. Stops at the first
/// nonpositive alpha or after n_max states, whichever comes first.
Ex42Result ex42_recurrence(double a_m, double alpha0, int n_max);

/// Taylor coefficients of g(z) = alpha0 (1 - x z) / (1 - 2 z x + x z^2) with
/// x = 1 - a_m^2, expanded through the underlying linear recurrence;
/// coefficient k equals alpha_k.
std::vector<double> ex42_generating_function(double a_m, double alpha0, int terms);

struct OscillationFit {
  double amplitude = 0.0;  // C
  double theta = 0.0;      // arccos(sqrt(x))
  double phase = 0.0;      // phi
  double eval(int n) const;
};

/// Solve alpha_n = C (sqrt x)^n cos(n theta + phi) from alpha_0 and alpha_1.
OscillationFit ex42_oscillation_fit(double a_m, double alpha0);

/// Truncated sum over n of n alpha_n (tail below 1e-14 relative).
double ex42_series_sum(double a_m, double alpha0);

/// The stated closed form -alpha0 x (1 - x) / (1 - x)^2 for that sum.
double ex42_series_closed_form(double a_m, double alpha0);

/// Minimum nonzero coefficient of x_star in the (unique) generator
/// coordinates; x_star must lie in the cone. Projections onto the cone and
/// onto its span agree on the ball of this radius around x_star when the
/// generators are orthonormal.
double ex43_coincidence_radius(const SimplicialCone& cone, const Vector& x_star);

/// A three-dimensional demonstration instance with orthonormal generators,
/// strictly positive coefficients, and an affine subspace through x_star that
/// misses the origin.
struct Ex43Instance {
  SimplicialCone cone;
  Span span;
  AffineSubspace affine;
  Vector x_star;
  double radius = 0.0;
};

Ex43Instance make_ex43_instance();

struct Ex44Result {
  IterationTrace trace;
  double fitted_rate = 0.0;
};

/// Douglas-Rachford for two lines through the origin at the given interior
/// angle; the fitted geometric rate of ||x_n - x*|| approaches cos(theta).
Ex44Result ex44_two_lines(double theta, const Vector& x0, int iters = 400);

/// The cone-versus-affine instance A = {(x, 1)}, S = {(x, x) : x >= 0} whose
/// Douglas-Rachford sequence converges to (1, 1) without finite termination.
struct Ex44ConeInstance {
  SimplicialCone cone;
  AffineSubspace affine;
  Vector intersection;  // (1, 1)
};

Ex44ConeInstance make_ex44_cone_instance();

/// Fixed-length Douglas-Rachford observation run on that instance, with the
/// distance to (1, 1) recorded per step.
IterationTrace ex44_cone_instance(const Vector& x0, int iters = 1000);

/// Least-squares geometric rate of a positive decaying sequence, fitted on
/// log-values over [window_lo, window_hi] after dropping entries at the
/// rounding floor. Returns 0 when the sequence dies before the window.
double fit_geometric_rate(const std::vector<double>& values, int window_lo = 10,
                          int window_hi = 100);

}  // namespace latfeas
