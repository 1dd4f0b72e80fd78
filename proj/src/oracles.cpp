#include "latfeas/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace latfeas {

void Ex41Config::validate() const {
  if (a.size() < 1) throw std::invalid_argument("Ex41Config: empty vector");
  if (std::abs(a.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("Ex41Config: a must be unit norm");
  if (a.minCoeff() <= 0.0 || a.maxCoeff() >= 1.0)
    throw std::invalid_argument("Ex41Config: entries of a must lie strictly in (0, 1)");
  if (m < 0 || m >= a.size()) throw std::invalid_argument("Ex41Config: bad coordinate index");
  if (!(alpha0 > 0.0)) throw std::invalid_argument("Ex41Config: alpha0 must be positive");
}

Ex41Config make_ex41(double a_m, double alpha0) {
  if (!(a_m > 0.0 && a_m < 1.0)) throw std::invalid_argument("make_ex41: a_m must lie in (0, 1)");
  Ex41Config cfg;
  cfg.a = Vector(2);
  cfg.a << a_m, std::sqrt(1.0 - a_m * a_m);
  cfg.m = 0;
  cfg.alpha0 = alpha0;
  cfg.validate();
  return cfg;
}

Vector ex41_closed_form(const Ex41Config& cfg, int n) {
  cfg.validate();
  Vector dir = -cfg.a_m() * cfg.a;
  dir[cfg.m] += 1.0;
  return cfg.alpha0 * std::pow(cfg.rate(), n) * dir;
}

AffineSubspace ex41_affine(const Ex41Config& cfg) {
  cfg.validate();
  Matrix row(1, cfg.a.size());
  row.row(0) = cfg.a.transpose();
  return AffineSubspace(std::move(row), Vector::Zero(1));
}

Vector ex41_start(const Ex41Config& cfg) { return ex41_closed_form(cfg, 0); }

namespace {

void require_ex42_params(double a_m, double alpha0) {
  if (!(a_m > 0.0) || !(a_m * a_m < 0.5))
    throw std::invalid_argument("ex42: need 0 < a_m with a_m^2 < 1/2");
  if (!(alpha0 > 0.0)) throw std::invalid_argument("ex42: alpha0 must be positive");
}

}  // namespace

Ex42Result ex42_recurrence(double a_m, double alpha0, int n_max) {
  require_ex42_params(a_m, alpha0);
  if (n_max < 0) throw std::invalid_argument("ex42_recurrence: n_max must be >= 0");

  Ex42Result out;
  double alpha = alpha0;
  double beta = alpha0 * a_m;
  for (int n = 0; n <= n_max; ++n) {
    out.states.push_back({alpha, beta, n});
    if (alpha <= 0.0) {
      out.first_nonpositive = n;
      break;
    }
    const double next_alpha = alpha - a_m * beta;
    const double next_beta = a_m * alpha + (1.0 - 2.0 * a_m * a_m) * beta;
    alpha = next_alpha;
    beta = next_beta;
  }
  return out;
}

std::vector<double> ex42_generating_function(double a_m, double alpha0, int terms) {
  require_ex42_params(a_m, alpha0);
  if (terms < 1) throw std::invalid_argument("ex42_generating_function: terms must be >= 1");
  const double x = 1.0 - a_m * a_m;
  std::vector<double> coeffs;
  coeffs.reserve(static_cast<size_t>(terms));
  coeffs.push_back(alpha0);
  if (terms > 1) coeffs.push_back(x * alpha0);
  for (int n = 2; n < terms; ++n)
    coeffs.push_back(2.0 * x * coeffs[static_cast<size_t>(n - 1)] -
                     x * coeffs[static_cast<size_t>(n - 2)]);
  return coeffs;
}

double OscillationFit::eval(int n) const {
  // The decay base sqrt(x) equals cos(theta).
  return amplitude * std::pow(std::cos(theta), n) * std::cos(n * theta + phase);
}

OscillationFit ex42_oscillation_fit(double a_m, double alpha0) {
  require_ex42_params(a_m, alpha0);
  const double x = 1.0 - a_m * a_m;
  const double root = std::sqrt(x);
  const double theta = std::acos(root);
  if (std::sin(theta) == 0.0)
    throw std::invalid_argument("ex42_oscillation_fit: degenerate angle");
  const double alpha1 = x * alpha0;
  // alpha_n = (sqrt x)^n (P cos n theta + R sin n theta) with P, R from the
  // first two terms; repack as C cos(n theta + phi).
  const double p = alpha0;
  const double r = (alpha1 / root - alpha0 * std::cos(theta)) / std::sin(theta);
  OscillationFit fit;
  fit.amplitude = std::hypot(p, r);
  fit.theta = theta;
  fit.phase = std::atan2(-r, p);
  return fit;
}

double ex42_series_sum(double a_m, double alpha0) {
  require_ex42_params(a_m, alpha0);
  const double x = 1.0 - a_m * a_m;
  const double r = std::sqrt(x);
  // |alpha_n| oscillates, so truncate on its geometric envelope C r^n rather
  // than on individual terms: sum_{k>n} k C r^k <= C r^{n+1} ((n+1)/(1-r) +
  // r/(1-r)^2).
  const double theta = std::acos(r);
  const double p = alpha0;
  const double q = (x * alpha0 / r - alpha0 * std::cos(theta)) / std::sin(theta);
  const double envelope = std::hypot(p, q);

  double sum = 0.0;
  double prev = alpha0;
  double cur = x * alpha0;
  for (int n = 1; n < 1000000; ++n) {
    sum += n * cur;
    const double next = 2.0 * x * cur - x * prev;
    prev = cur;
    cur = next;
    const double tail = envelope * std::pow(r, n + 1) *
                        ((n + 1) / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
    if (tail < 1e-14 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

double ex42_series_closed_form(double a_m, double alpha0) {
  require_ex42_params(a_m, alpha0);
  const double x = 1.0 - a_m * a_m;
  return -alpha0 * x * (1.0 - x) / ((1.0 - x) * (1.0 - x));
}

double ex43_coincidence_radius(const SimplicialCone& cone, const Vector& x_star) {
  if (x_star.size() != cone.dim())
    throw std::invalid_argument("ex43_coincidence_radius: dimension mismatch");
  const double scale = x_star.cwiseAbs().maxCoeff();
  if (scale == 0.0) throw std::invalid_argument("ex43_coincidence_radius: x_star must be nonzero");

  Vector coeffs = cone.coordinates(x_star);
  if ((cone.generators() * coeffs - x_star).norm() > 1e-9 * std::max(1.0, scale))
    throw std::invalid_argument("ex43_coincidence_radius: x_star is not in the span");
  const double coeff_scale = std::max(1.0, coeffs.cwiseAbs().maxCoeff());
  if (coeffs.minCoeff() < -1e-9 * coeff_scale)
    throw std::invalid_argument("ex43_coincidence_radius: x_star is not in the cone");

  double radius = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] > 1e-12 * coeff_scale) radius = std::min(radius, coeffs[j]);
  }
  if (!std::isfinite(radius))
    throw std::invalid_argument("ex43_coincidence_radius: representation has no nonzero coefficient");
  return radius;
}

Ex43Instance make_ex43_instance() {
  Matrix gens(3, 2);
  gens.col(0) << std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0, 0.0;
  gens.col(1) << 0.0, 0.0, 1.0;
  SimplicialCone cone(gens);
  Span span(gens);
  Vector x_star = 2.0 * gens.col(0) + 1.5 * gens.col(1);
  Matrix row(1, 3);
  row << 1.0, 0.5, 0.25;
  Vector rhs(1);
  rhs[0] = row.row(0).dot(x_star);
  AffineSubspace affine(std::move(row), std::move(rhs));
  const double radius = ex43_coincidence_radius(cone, x_star);
  return {std::move(cone), std::move(span), std::move(affine), std::move(x_star), radius};
}

Ex44Result ex44_two_lines(double theta, const Vector& x0, int iters) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0))
    throw std::invalid_argument("ex44_two_lines: theta must lie strictly in (0, pi/2)");
  if (x0.size() != 2) throw std::invalid_argument("ex44_two_lines: x0 must be planar");

  Matrix gen(2, 1);
  gen << std::cos(theta), std::sin(theta);
  ConeSpec line = Span(gen);
  Matrix row(1, 2);
  row << 0.0, 1.0;  // the horizontal axis
  AffineSubspace axis(std::move(row), Vector::Zero(1));

  RunOptions opts;
  opts.max_iters = iters;
  opts.tol = 0.0;
  opts.stop_early = false;
  IterationTrace trace = run(MethodSpec::dr(), line, axis, x0, opts);

  std::vector<double> dists;
  dists.reserve(trace.records.size());
  for (const StepRecord& rec : trace.records)
    dists.push_back((rec.x - trace.final_point).norm());
  Ex44Result out;
  out.fitted_rate = fit_geometric_rate(dists);
  out.trace = std::move(trace);
  return out;
}

Ex44ConeInstance make_ex44_cone_instance() {
  Matrix gen(2, 1);
  gen << std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0;
  Matrix row(1, 2);
  row << 0.0, 1.0;
  Vector rhs(1);
  rhs << 1.0;
  Vector fix(2);
  fix << 1.0, 1.0;
  return {SimplicialCone(std::move(gen)), AffineSubspace(std::move(row), std::move(rhs)),
          std::move(fix)};
}

IterationTrace ex44_cone_instance(const Vector& x0, int iters) {
  if (x0.size() != 2) throw std::invalid_argument("ex44_cone_instance: x0 must be planar");
  Ex44ConeInstance inst = make_ex44_cone_instance();

  RunOptions opts;
  opts.max_iters = iters;
  opts.tol = 0.0;
  opts.stop_early = false;  // fixed-length observation run
  opts.reference_point = inst.intersection;
  return run(MethodSpec::dr(), ConeSpec(inst.cone), inst.affine, x0, opts);
}

double fit_geometric_rate(const std::vector<double>& values, int window_lo, int window_hi) {
  const double peak = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  const double floor = 1e-13 * std::max(1.0, peak);

  auto collect = [&](int lo) {
    std::vector<std::pair<double, double>> pts;
    const int hi = std::min<int>(window_hi, static_cast<int>(values.size()) - 1);
    for (int n = lo; n <= hi; ++n) {
      if (values[static_cast<size_t>(n)] > floor)
        pts.emplace_back(n, std::log(values[static_cast<size_t>(n)]));
    }
    return pts;
  };

  auto pts = collect(window_lo);
  if (pts.size() < 3) pts = collect(1);
  if (pts.size() < 3) return 0.0;

  double sn = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [xv, yv] : pts) {
    sn += 1;
    sx += xv;
    sy += yv;
    sxx += xv * xv;
    sxy += xv * yv;
  }
  const double slope = (sn * sxy - sx * sy) / (sn * sxx - sx * sx);
  return std::exp(slope);
}

}  // namespace latfeas
