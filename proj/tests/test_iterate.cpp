#include <doctest.h>

#include <cmath>

#include "latfeas/conditions.hpp"
#include "latfeas/iterate.hpp"
#include "latfeas/oracles.hpp"
#include "test_util.hpp"

using namespace latfeas;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

AffineSubspace hyperplane(std::initializer_list<double> normal, double rhs) {
  Vector t = vec(normal);
  Matrix row(1, t.size());
  row.row(0) = t.transpose();
  Vector b(1);
  b[0] = rhs;
  return AffineSubspace(std::move(row), std::move(b));
}

}  // namespace

TEST_CASE("alternating-projection step on fixed cases") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  CHECK((step_map(cone, a, vec({2, 0})) - vec({2, 0})).norm() <= 1e-12);
  CHECK((step_map(cone, a, vec({0, -2})) - vec({1, 1})).norm() <= 1e-12);

  AffineSubspace diag = hyperplane({1, -1}, 0.0);
  CHECK((step_map(cone, diag, vec({4, -2})) - vec({2, 2})).norm() <= 1e-12);
}

TEST_CASE("Douglas-Rachford step on fixed cases") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  CHECK((step_dr(cone, a, vec({1.5, 0.5})) - vec({1.5, 0.5})).norm() <= 1e-12);

  // Hyperplane through the origin with normal (0.6, 0.8): one step of the
  // coefficient recurrence alpha' = alpha - a_m beta, beta' = a_m alpha +
  // (1 - 2 a_m^2) beta.
  AffineSubspace zero_line = hyperplane({0.6, 0.8}, 0.0);
  const Vector x0 = vec({0.64, -0.48});
  const Vector x1 = step_dr(cone, zero_line, x0);
  const Vector expected = 0.64 * vec({1, 0}) - 0.768 * vec({0.6, 0.8});
  CHECK((x1 - expected).norm() <= 1e-12);
  CHECK(x1[0] == doctest::Approx(0.1792).epsilon(1e-12));
  CHECK(x1[1] == doctest::Approx(-0.6144).epsilon(1e-12));
}

TEST_CASE("relaxed step recovers the presets and its expansion form") {
  std::mt19937_64 rng(2);
  ConeSpec cone = LatticeCone{3};
  Matrix rows(1, 3);
  rows << 0.5, -1.0, 0.25;
  AffineSubspace a(rows, vec({0.7}));

  for (int trial = 0; trial < 200; ++trial) {
    const Vector x = test::random_vector(rng, 3);
    CHECK((step_relaxed(AlgorithmParams::dr(), cone, a, x) - step_dr(cone, a, x)).norm() <= 1e-12);
    CHECK((step_relaxed(AlgorithmParams::map(), cone, a, x) - step_map(cone, a, x)).norm() <=
          1e-12);

    std::uniform_real_distribution<double> unit(0.0, 0.999);
    AlgorithmParams p{unit(rng), unit(rng), unit(rng)};
    CHECK((step_relaxed(p, cone, a, x) - step_relaxed_expansion(p, cone, a, x)).norm() <= 1e-10);
  }

  // Common fixed points stay fixed for any parameters.
  const Vector fixed = vec({0.5, 0.5, 0.0});
  Matrix row3(1, 3);
  row3 << 1, -1, 0;
  AffineSubspace diag3(row3, Vector::Zero(1));
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> unit(0.0, 0.999);
    AlgorithmParams p{unit(rng), unit(rng), unit(rng)};
    CHECK((step_relaxed(p, cone, diag3, fixed) - fixed).norm() <= 1e-12);
  }
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS((AlgorithmParams{1.0, 0.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AlgorithmParams{0.0, -0.1, 0.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((AlgorithmParams{0.0, 0.0, 0.0}.validate()));
}

TEST_CASE("run stops immediately from a feasible start") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  const Vector x0 = vec({1.5, 0.5});
  for (MethodSpec m : {MethodSpec::map(), MethodSpec::dr(),
                       MethodSpec::relaxed({0.25, 0.25, 1.0 / 3.0})}) {
    IterationTrace trace = run(m, cone, a, x0);
    CHECK(trace.stop_reason == StopReason::converged);
    CHECK(trace.records.back().n <= 1);
    CHECK((trace.final_point - x0).norm() <= 1e-12);
  }
}

TEST_CASE("run detects finite termination of Douglas-Rachford on the collapsing instance") {
  const Ex41Config cfg = make_ex41(0.6, 1.0);
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = ex41_affine(cfg);
  IterationTrace trace = run(MethodSpec::dr(), cone, a, ex41_start(cfg));
  CHECK(trace.stop_reason == StopReason::finite_termination);
  CHECK(trace.records.back().n < 20);
  // The shadow of the final point is the solution (the origin).
  CHECK(pos_part(trace.final_point).norm() <= 1e-12);
}

TEST_CASE("run flags non-finite iterates as diverged") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);

  Vector bad(2);
  bad << std::numeric_limits<double>::quiet_NaN(), 0.0;
  IterationTrace t0 = run(MethodSpec::dr(), cone, a, bad);
  CHECK(t0.stop_reason == StopReason::diverged);
  CHECK(t0.diverged_index == 0);

  // A start near the overflow threshold blows up in the affine solve.
  Vector huge(2);
  huge << 1e308, 1e308;
  IterationTrace t1 = run(MethodSpec::dr(), cone, a, huge);
  CHECK(t1.stop_reason == StopReason::diverged);
  CHECK(t1.diverged_index == 1);
  CHECK(t1.final_point.allFinite());
}

TEST_CASE("run validates its inputs") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  RunOptions opts;
  opts.max_iters = 0;
  CHECK_THROWS_AS(run(MethodSpec::dr(), cone, a, vec({0, 0}), opts), std::invalid_argument);
  CHECK_THROWS_AS(run(MethodSpec::dr(), cone, a, vec({0, 0, 0})), std::invalid_argument);
  RunOptions bad_ref;
  bad_ref.reference_point = vec({1, 2, 3});
  CHECK_THROWS_AS(run(MethodSpec::dr(), cone, a, vec({0, 0}), bad_ref), std::invalid_argument);
}

TEST_CASE("step records satisfy the telescoping identity and cone membership") {
  ConeSpec cone = LatticeCone{3};
  Matrix rows(2, 3);
  rows.row(0) << 1, -1, 0.5;
  rows.row(1) << 0, 1, -0.25;
  AffineSubspace a(rows, vec({0.4, 0.9}));
  const Vector x0 = vec({2, -3, 1});

  for (MethodSpec m : {MethodSpec::map(), MethodSpec::dr(),
                       MethodSpec::relaxed({0.3, 0.1, 0.6})}) {
    RunOptions opts;
    opts.max_iters = 300;
    IterationTrace trace = run(m, cone, a, x0, opts);
    for (size_t i = 0; i < trace.records.size(); ++i) {
      CHECK(telescope_residual(trace, i) <= 1e-8);
      // kappa is a positive multiple of the polar projection, so it must be
      // componentwise nonpositive for the lattice cone.
      if (trace.records[i].kappa.size() > 0)
        CHECK(trace.records[i].kappa.maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("the Q-image of lambda does not depend on the chosen point of A") {
  // Any two points of A differ by a null vector of Q, so Q(xbar - w) is the
  // same for every xbar in A.
  ConeSpec cone = LatticeCone{3};
  Matrix rows(1, 3);
  rows << 0.3, -0.8, 0.52;
  AffineSubspace a(rows, vec({1.3}));
  const Matrix q = a.projector();

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector x = test::random_vector(rng, 3);
    const Vector r = reflect(cone, x);
    const Vector other_point =
        a.particular_point() + (Matrix::Identity(3, 3) - q) * test::random_vector(rng, 3);
    CHECK(a.residual(other_point) <= 1e-9);
    CHECK((a.apply_Q(a.particular_point() - r) - a.apply_Q(other_point - r)).norm() <= 1e-12);
  }
}

TEST_CASE("norms-only traces keep the scalar columns") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  RunOptions opts;
  opts.store_vectors = false;
  opts.max_iters = 50;
  IterationTrace trace = run(MethodSpec::dr(), cone, a, vec({-0.7, 3.6}), opts);
  REQUIRE(!trace.records.empty());
  for (const StepRecord& rec : trace.records) {
    CHECK(rec.x.size() == 0);
    CHECK(rec.norm_x >= 0.0);
    CHECK(rec.dist_A >= 0.0);
  }
  // Vector-based diagnostics refuse such traces instead of misreporting.
  CHECK_THROWS_AS((void)telescope_residual(trace, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)recession_diagnostic(cone, trace), std::invalid_argument);
}

TEST_CASE("Fejer monotonicity with a supplied fixed point") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  RunOptions opts;
  opts.reference_point = vec({1, 1});
  opts.max_iters = 500;
  const Vector x0 = vec({-0.7, 3.6});

  for (MethodSpec m : {MethodSpec::map(), MethodSpec::dr(),
                       MethodSpec::relaxed({0.25, 0.25, 1.0 / 3.0})}) {
    IterationTrace trace = run(m, cone, a, x0, opts);
    for (size_t i = 1; i < trace.records.size(); ++i)
      CHECK(trace.records[i].fejer_dist <= trace.records[i - 1].fejer_dist + 1e-10);
  }
}

TEST_CASE("alternating projections freeze once an iterate enters the cone") {
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  // The first projection pair lands in S cap A at once; keep stepping to
  // observe the frozen tail.
  RunOptions opts;
  opts.tol = 0.0;
  opts.max_iters = 20;
  opts.stop_early = false;
  IterationTrace trace = run(MethodSpec::map(), cone, a, vec({1.5, 0.7}), opts);

  int entered = -1;
  for (const StepRecord& rec : trace.records) {
    if (rec.n >= 1 && rec.x.minCoeff() >= -1e-10) {
      entered = rec.n;
      break;
    }
  }
  REQUIRE(entered >= 1);
  const Vector& frozen = trace.records[static_cast<size_t>(entered)].x;
  for (const StepRecord& rec : trace.records) {
    if (rec.n > entered) CHECK((rec.x - frozen).norm() <= 1e-8);
    if (rec.n > entered) CHECK(rec.lambda_img.norm() <= 1e-8);
  }
}

TEST_CASE("Douglas-Rachford freezes one step after entering the cone when Q(S) stays in S") {
  // Positive normal, so Q maps the lattice cone into itself; the checker
  // certifies that hypothesis.
  ConeSpec cone = LatticeCone{2};
  AffineSubspace a = hyperplane({1, 1}, 2.0);
  REQUIRE(check_Q_maps_S(a, LatticeCone{2}).verdict == Verdict::holds);
  IterationTrace trace = run(MethodSpec::dr(), cone, a, vec({-0.7, 3.6}));
  REQUIRE(trace.stop_reason == StopReason::finite_termination);

  int entered = -1;
  for (const StepRecord& rec : trace.records) {
    if (rec.x.minCoeff() >= -1e-10) {
      entered = rec.n;
      break;
    }
  }
  REQUIRE(entered >= 0);
  REQUIRE(static_cast<size_t>(entered + 1) < trace.records.size());
  const Vector& frozen = trace.records[static_cast<size_t>(entered + 1)].x;
  for (const StepRecord& rec : trace.records) {
    if (rec.n > entered + 1) {
      CHECK((rec.x - frozen).norm() <= 1e-8);
      CHECK(rec.lambda_img.norm() <= 1e-8);
    }
  }
}

TEST_CASE("all methods settle on a feasible point for a simplicial cone") {
  Matrix gens(3, 2);
  gens.col(0) << 1.0, 0.0, 0.0;
  gens.col(1) << 0.0, std::sqrt(0.5), std::sqrt(0.5);
  ConeSpec cone = SimplicialCone(gens);
  // The affine line passes through a cone point, so the instance is feasible.
  const Vector inside = 1.5 * gens.col(0) + 0.5 * gens.col(1);
  Matrix rows(2, 3);
  rows.row(0) << 1.0, 0.2, -0.4;
  rows.row(1) << 0.0, 1.0, 0.5;
  AffineSubspace a(rows, rows * inside);

  RunOptions opts;
  opts.max_iters = 5000;
  opts.tol = 1e-10;
  opts.reference_point = inside;
  const Vector x0 = vec({2.0, -1.0, 0.5});
  for (MethodSpec m : {MethodSpec::map(), MethodSpec::dr(),
                       MethodSpec::relaxed({0.25, 0.25, 1.0 / 3.0})}) {
    IterationTrace trace = run(m, cone, a, x0, opts);
    REQUIRE((trace.stop_reason == StopReason::converged ||
             trace.stop_reason == StopReason::finite_termination));
    const Vector shadow = project(cone, trace.final_point);
    CHECK((trace.final_point - shadow).norm() <= 1e-6);
    CHECK(a.residual(shadow) <= 1e-6);
    for (size_t i = 1; i < trace.records.size(); ++i)
      CHECK(trace.records[i].fejer_dist <= trace.records[i - 1].fejer_dist + 1e-10);
  }
}

TEST_CASE("membership residual of the Douglas-Rachford point") {
  ConeSpec cone = LatticeCone{3};
  Matrix rows(2, 3);
  rows.row(0) << 1, -1, 0.5;
  rows.row(1) << 0, 1, -0.25;
  AffineSubspace a(rows, vec({0.4, 0.9}));
  const Vector x0 = vec({2, -3, 1});

  RunOptions opts;
  opts.max_iters = 100;
  IterationTrace dr_trace = run(MethodSpec::dr(), cone, a, x0, opts);
  for (size_t i = 1; i < dr_trace.records.size(); ++i)
    CHECK(dr_affine_membership_residual(cone, a, dr_trace.records[i - 1].x,
                                        dr_trace.records[i].x) <= 1e-8);

  // Relaxed method satisfying (1-a)(1-c) = (1-b)(1-c) = 1/2.
  AlgorithmParams constrained{0.25, 0.25, 1.0 / 3.0};
  IterationTrace rel_trace = run(MethodSpec::relaxed(constrained), cone, a, x0, opts);
  for (size_t i = 1; i < rel_trace.records.size(); ++i)
    CHECK(dr_affine_membership_residual(cone, a, rel_trace.records[i - 1].x,
                                        rel_trace.records[i].x, constrained) <= 1e-8);

  // The identity holds for arbitrary relaxation parameters as well.
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 0.999);
  for (int trial = 0; trial < 50; ++trial) {
    AlgorithmParams p{unit(rng), unit(rng), unit(rng)};
    Vector x(3);
    x << unit(rng) * 6 - 3, unit(rng) * 6 - 3, unit(rng) * 6 - 3;
    const Vector next = step_relaxed(p, cone, a, x);
    CHECK(dr_affine_membership_residual(cone, a, x, next, p) <= 1e-10);
  }

  // A perturbation off the parallel subspace is detected at first order.
  const Vector x1 = dr_trace.records[1].x;
  const Vector normal = rows.row(0).transpose().normalized();
  const double eps = 1e-3;
  const double residual = dr_affine_membership_residual(cone, a, x0, x1 + eps * normal);
  const double expected = eps * (rows * normal).norm();
  CHECK(residual == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("recession diagnostic on synthetic and closed-form traces") {
  ConeSpec cone = LatticeCone{2};

  // Constructed trace whose alpha images grow along a fixed direction of the
  // polar cone.
  IterationTrace synth;
  const Vector v = vec({-1, -2});
  for (int n = 0; n < 50; ++n) {
    StepRecord rec;
    rec.n = n;
    rec.alpha_img = n * v;
    rec.norm_alpha_img = rec.alpha_img.norm();
    synth.records.push_back(rec);
  }
  RecessionDiagnostic diag = recession_diagnostic(cone, synth);
  REQUIRE(diag.directions.size() == 1);
  CHECK((diag.directions[0] - v.normalized()).norm() <= 1e-12);
  CHECK(diag.in_cone);

  // Mixed-sign direction: not in the polar cone.
  IterationTrace mixed = synth;
  for (StepRecord& rec : mixed.records) {
    rec.alpha_img = rec.n * vec({1, -1});
    rec.norm_alpha_img = rec.alpha_img.norm();
  }
  RecessionDiagnostic diag_mixed = recession_diagnostic(cone, mixed);
  REQUIRE(diag_mixed.directions.size() == 1);
  CHECK(!diag_mixed.in_cone);

  // All alpha images below tolerance: vacuously not in the cone.
  IterationTrace flat;
  StepRecord rec;
  rec.n = 0;
  rec.alpha_img = Vector::Zero(2);
  flat.records.push_back(rec);
  RecessionDiagnostic diag_flat = recession_diagnostic(cone, flat);
  CHECK(diag_flat.directions.empty());
  CHECK(!diag_flat.in_cone);

  // Closed-form alternating projections: the alpha images point along -a,
  // which does lie in the polar cone. An in-cone direction does not preclude
  // convergence; this sequence converges regardless.
  const Ex41Config cfg = make_ex41(0.6, 1.0);
  RunOptions opts;
  opts.max_iters = 120;
  opts.tol = 0.0;
  IterationTrace map_trace = run(MethodSpec::map(), cone, ex41_affine(cfg), ex41_start(cfg), opts);
  RecessionDiagnostic diag_map = recession_diagnostic(cone, map_trace);
  REQUIRE(diag_map.directions.size() == 1);
  CHECK(diag_map.directions[0].dot(cfg.a) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(diag_map.in_cone);

  // A finitely terminating run accumulates at most one direction.
  IterationTrace dr_trace = run(MethodSpec::dr(), cone, ex41_affine(cfg), ex41_start(cfg));
  RecessionDiagnostic diag_dr = recession_diagnostic(cone, dr_trace);
  CHECK(diag_dr.directions.size() <= 1);
}
