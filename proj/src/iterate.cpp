#include "latfeas/iterate.hpp"

#include <algorithm>
#include <cmath>

namespace latfeas {

namespace {

// Steps at least this small (relative) count as "the sequence stopped
// moving"; used to tell genuine finite termination from an iterate that is
// merely within tol of its successor.
constexpr double kConstancyEps = 1e-13;

struct StepParts {
  Vector x_next;
  Vector kappa;
  Vector lambda;
};

StepParts make_step(const MethodSpec& method, const ConeSpec& cone,
                    const AffineSubspace& affine, const Vector& x) {
  const Vector p = project(cone, x);
  switch (method.kind) {
    case Method::map: {
      return {affine.project(p), x - p, affine.particular_point() - p};
    }
    case Method::dr: {
      Vector r = 2.0 * p - x;
      Vector lambda = affine.particular_point() - r;
      return {0.5 * (x + affine.reflect(r)), x - p, std::move(lambda)};
    }
    case Method::relaxed: {
      const AlgorithmParams& q = method.params;
      Vector ra = q.a * x + (1.0 - q.a) * (2.0 * p - x);
      Vector rb = q.b * ra + (1.0 - q.b) * affine.reflect(ra);
      Vector kappa = q.kappa_scale() * (x - p);
      Vector lambda = q.tau() * (affine.particular_point() - ra);
      return {q.c * x + (1.0 - q.c) * rb, std::move(kappa), std::move(lambda)};
    }
  }
  throw std::logic_error("make_step: unknown method");
}

}  // namespace

void AlgorithmParams::validate() const {
  auto ok = [](double v) { return v >= 0.0 && v < 1.0 && std::isfinite(v); };
  if (!ok(a) || !ok(b) || !ok(c))
    throw std::invalid_argument("AlgorithmParams: a, b, c must lie in [0, 1)");
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::converged: return "converged";
    case StopReason::finite_termination: return "finite_termination";
    case StopReason::max_iters: return "max_iters";
    case StopReason::diverged: return "diverged";
  }
  return "unknown";
}

Vector step_map(const ConeSpec& cone, const AffineSubspace& affine, const Vector& x) {
  return affine.project(project(cone, x));
}

Vector step_dr(const ConeSpec& cone, const AffineSubspace& affine, const Vector& x) {
  return 0.5 * (x + affine.reflect(reflect(cone, x)));
}

Vector step_relaxed(const AlgorithmParams& p, const ConeSpec& cone,
                    const AffineSubspace& affine, const Vector& x) {
  p.validate();
  Vector ra = p.a * x + (1.0 - p.a) * reflect(cone, x);
  Vector rb = p.b * ra + (1.0 - p.b) * affine.reflect(ra);
  return p.c * x + (1.0 - p.c) * rb;
}

Vector step_relaxed_expansion(const AlgorithmParams& p, const ConeSpec& cone,
                              const AffineSubspace& affine, const Vector& x) {
  p.validate();
  Vector ra = p.a * x + (1.0 - p.a) * reflect(cone, x);
  return x - p.kappa_scale() * project_polar(cone, x) +
         p.tau() * affine.apply_Q(affine.particular_point() - ra);
}

IterationTrace run(const MethodSpec& method, const ConeSpec& cone,
                   const AffineSubspace& affine, const Vector& x0,
                   const RunOptions& opts) {
  method.params.validate();
  const Index n_dim = dim_of(cone);
  if (affine.dim() != n_dim)
    throw std::invalid_argument("run: cone and affine subspace dimensions differ");
  if (x0.size() != n_dim) throw std::invalid_argument("run: x0 dimension mismatch");
  if (opts.max_iters < 1) throw std::invalid_argument("run: max_iters must be >= 1");
  if (opts.reference_point && opts.reference_point->size() != n_dim)
    throw std::invalid_argument("run: reference point dimension mismatch");

  IterationTrace trace;
  trace.records.reserve(static_cast<size_t>(std::min(opts.max_iters + 1, 1 << 20)));

  auto push = [&](int n, const Vector& x, const Vector& kappa, const Vector& lambda_img,
                  const Vector& sigma, const Vector& alpha_img) {
    StepRecord rec;
    rec.n = n;
    rec.norm_x = x.norm();
    rec.norm_alpha_img = alpha_img.norm();
    rec.dist_S = dist(cone, x);
    rec.dist_A = (x - affine.project(x)).norm();
    if (opts.reference_point) rec.fejer_dist = (x - *opts.reference_point).norm();
    if (opts.store_vectors) {
      rec.x = x;
      rec.kappa = kappa;
      rec.lambda_img = lambda_img;
      rec.sigma = sigma;
      rec.alpha_img = alpha_img;
    }
    trace.records.push_back(std::move(rec));
  };

  Vector x = x0;
  Vector sigma = Vector::Zero(n_dim);
  Vector alpha_img = Vector::Zero(n_dim);

  if (!x.allFinite()) {
    push(0, x, Vector::Zero(n_dim), Vector::Zero(n_dim), sigma, alpha_img);
    trace.stop_reason = StopReason::diverged;
    trace.diverged_index = 0;
    trace.final_point = x;
    return trace;
  }
  push(0, x, Vector::Zero(n_dim), Vector::Zero(n_dim), sigma, alpha_img);

  auto shadow_feasible = [&](const Vector& xv) {
    return affine.residual(project(cone, xv)) <= opts.tol;
  };

  int streak = 0;
  bool moved = false;
  for (int n = 1; n <= opts.max_iters; ++n) {
    StepParts s = make_step(method, cone, affine, x);
    if (!s.x_next.allFinite()) {
      trace.stop_reason = StopReason::diverged;
      trace.diverged_index = n;
      trace.final_point = x;
      return trace;
    }
    Vector lambda_img = affine.apply_Q(s.lambda);
    sigma += s.kappa;
    alpha_img += lambda_img;
    const double step_norm = (s.x_next - x).norm();
    push(n, s.x_next, s.kappa, lambda_img, sigma, alpha_img);

    const double scale = std::max(1.0, x.norm());
    const bool constant_now = step_norm <= std::min(opts.tol, kConstancyEps * scale);
    if (constant_now)
      ++streak;
    else {
      streak = 0;
      moved = true;
    }
    x = std::move(s.x_next);
    if (!opts.stop_early) continue;

    if (constant_now && streak >= 2 && moved && shadow_feasible(x)) {
      trace.stop_reason = StopReason::finite_termination;
      trace.final_point = x;
      return trace;
    }
    if (step_norm <= opts.tol) {
      if (constant_now && moved && shadow_feasible(x)) continue;  // confirm constancy next step
      trace.stop_reason = StopReason::converged;
      trace.final_point = x;
      return trace;
    }
  }
  trace.stop_reason = StopReason::max_iters;
  trace.final_point = x;
  return trace;
}

double telescope_residual(const IterationTrace& trace, size_t n) {
  if (n >= trace.records.size()) throw std::out_of_range("telescope_residual: no such record");
  const StepRecord& first = trace.records.front();
  const StepRecord& rec = trace.records[n];
  if (rec.x.size() == 0) throw std::invalid_argument("telescope_residual: trace stored without vectors");
  return ((rec.x - first.x) - (-rec.sigma + rec.alpha_img)).norm();
}

RecessionDiagnostic recession_diagnostic(const ConeSpec& cone, const IterationTrace& trace,
                                         double tol) {
  if (trace.records.empty()) throw std::invalid_argument("recession_diagnostic: empty trace");
  constexpr double kAngleThreshold = 1e-3;  // radians

  std::vector<Vector> sums;  // unnormalized cluster accumulators
  for (const StepRecord& rec : trace.records) {
    if (rec.norm_alpha_img <= tol) continue;
    if (rec.alpha_img.size() == 0)
      throw std::invalid_argument("recession_diagnostic: trace stored without vectors");
    Vector q = rec.alpha_img / rec.norm_alpha_img;
    bool assigned = false;
    for (Vector& sum : sums) {
      const Vector rep = sum / sum.norm();
      const double cosang = std::clamp(rep.dot(q), -1.0, 1.0);
      if (std::acos(cosang) <= kAngleThreshold) {
        sum += q;
        assigned = true;
        break;
      }
    }
    if (!assigned) sums.push_back(std::move(q));
  }

  RecessionDiagnostic out;
  out.in_cone = !sums.empty();
  for (const Vector& s : sums) {
    Vector rep = s / s.norm();
    // Membership in K = S^-: the cone part of rep must vanish.
    if (project(cone, rep).norm() > tol) out.in_cone = false;
    out.directions.push_back(std::move(rep));
  }
  return out;
}

double dr_affine_membership_residual(const ConeSpec& cone, const AffineSubspace& affine,
                                     const Vector& x_prev, const Vector& x_next,
                                     const AlgorithmParams& p) {
  // Applying Q to the expansion form and using R_S^a x = x - 2(1-a) P_polar x
  // gives Q x_next = (1 - tau) Q x_prev + 2(1-a)(1-c)(1-2b) Q P_polar x_prev
  // + tau Q xbar, so the point below lies in A. The polar coefficient reduces
  // to (1-a) tau only when b = 0, which covers the plain Douglas-Rachford
  // case.
  const double tau = p.tau();
  const double polar_coeff = 2.0 * (1.0 - p.a) * (1.0 - p.c) * (1.0 - 2.0 * p.b);
  Vector point =
      (x_next + (tau - 1.0) * x_prev - polar_coeff * project_polar(cone, x_prev)) / tau;
  return affine.residual(point);
}

}  // namespace latfeas
