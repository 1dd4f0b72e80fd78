#include "latfeas/conditions.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "latfeas/simplex.hpp"

namespace latfeas {

namespace {

constexpr double kSignTol = 1e-10;

void require_lattice_instance(const AffineSubspace& affine, const LatticeCone& cone) {
  if (affine.dim() != cone.dim)
    throw std::invalid_argument("condition check: cone and affine dimensions differ");
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undetermined: return "undetermined";
  }
  return "unknown";
}

std::string to_string(ConditionId id) {
  switch (id) {
    case ConditionId::range_cap_trivial: return "range_cap_trivial";
    case ConditionId::Q_maps_S_into_S: return "Q_maps_S_into_S";
    case ConditionId::Q_A_minus_S_signed: return "Q_A_minus_S_signed";
    case ConditionId::codim_one: return "codim_one";
    case ConditionId::transversality: return "transversality";
  }
  return "unknown";
}

ConditionReport check_range_cap_cone(const AffineSubspace& affine, const LatticeCone& cone) {
  require_lattice_instance(affine, cone);
  const Index n = affine.dim();
  const Index m = affine.codim();

  // Variables: x (n), y+ (m), y- (m), slack (1).
  // Rows: x - T^T y+ + T^T y- = 0 (n of them), sum(x) + slack = 1.
  const Index nv = n + 2 * m + 1;
  Matrix a = Matrix::Zero(n + 1, nv);
  Vector b = Vector::Zero(n + 1);
  Vector cost = Vector::Zero(nv);
  a.block(0, 0, n, n) = Matrix::Identity(n, n);
  a.block(0, n, n, m) = -affine.rows().transpose();
  a.block(0, n + m, n, m) = affine.rows().transpose();
  a.block(n, 0, 1, n).setOnes();
  a(n, nv - 1) = 1.0;
  b[n] = 1.0;
  cost.head(n).setOnes();

  ConditionReport report;
  report.condition = ConditionId::range_cap_trivial;
  LpResult lp;
  try {
    lp = solve_lp(a, b, cost);
  } catch (const std::exception& e) {
    report.verdict = Verdict::undetermined;
    report.detail = std::string("LP failure: ") + e.what();
    return report;
  }
  if (lp.status != LpStatus::optimal) {
    report.verdict = Verdict::undetermined;
    report.detail = "LP did not reach an optimum";
    return report;
  }
  std::ostringstream detail;
  detail << "LP optimum " << lp.objective;
  report.detail = detail.str();
  if (lp.objective < 0.5) {
    report.verdict = Verdict::holds;
  } else {
    report.verdict = Verdict::fails;
    Vector ray = lp.x.head(n);
    report.certificate = ray / ray.cwiseAbs().maxCoeff();
  }
  return report;
}

ConditionReport check_Q_maps_S(const AffineSubspace& affine, const LatticeCone& cone) {
  require_lattice_instance(affine, cone);
  const Matrix q = affine.projector();

  ConditionReport report;
  report.condition = ConditionId::Q_maps_S_into_S;
  for (Index j = 0; j < q.cols(); ++j) {
    if (q.col(j).minCoeff() < -kSignTol) {
      report.verdict = Verdict::fails;
      report.certificate = Vector(Vector::Unit(q.cols(), j));
      std::ostringstream detail;
      detail << "Q e_" << j << " has entry " << q.col(j).minCoeff();
      report.detail = detail.str();
      return report;
    }
  }
  report.verdict = Verdict::holds;
  report.detail = "all basis images nonnegative";
  return report;
}

ConditionReport check_QAminusS_signed(const AffineSubspace& affine, const LatticeCone& cone,
                                      int samples, std::uint64_t seed) {
  require_lattice_instance(affine, cone);
  if (samples < 1) throw std::invalid_argument("check_QAminusS_signed: samples must be >= 1");

  ConditionReport report;
  report.condition = ConditionId::Q_A_minus_S_signed;
  report.seed = seed;

  if (affine.codim() == 1) {
    // Q(H) is the line spanned by the normal, so the inclusion is exactly a
    // uniform sign pattern of the normal.
    Vector normal = affine.rows().row(0).transpose();
    normal /= normal.norm();
    const bool has_pos = normal.maxCoeff() > kSignTol;
    const bool has_neg = normal.minCoeff() < -kSignTol;
    if (has_pos && has_neg) {
      report.verdict = Verdict::fails;
      report.certificate = normal;
      report.detail = "mixed-sign normal";
    } else {
      report.verdict = Verdict::holds;
      report.detail = "uniform-sign normal";
    }
    return report;
  }

  // Codimension >= 2: falsify over draws z = xbar - s with s componentwise
  // exponential; a mixed-sign image Qz disproves the inclusion.
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp_draw(1.0);
  const double scale = 1.0 + affine.particular_point().cwiseAbs().maxCoeff();
  const Index n = affine.dim();
  for (int k = 0; k < samples; ++k) {
    Vector s(n);
    for (Index i = 0; i < n; ++i) s[i] = scale * exp_draw(rng);
    Vector z = affine.particular_point() - s;
    Vector w = affine.apply_Q(z);
    const double margin = 1e-9 * std::max(1.0, w.cwiseAbs().maxCoeff());
    if (w.maxCoeff() > margin && w.minCoeff() < -margin) {
      report.verdict = Verdict::fails;
      report.certificate = z;
      std::ostringstream detail;
      detail << "mixed-sign image found at draw " << k;
      report.detail = detail.str();
      return report;
    }
  }
  report.verdict = Verdict::undetermined;
  std::ostringstream detail;
  detail << "no mixed-sign image in " << samples << " draws";
  report.detail = detail.str();
  return report;
}

ConditionReport check_codim_one(const AffineSubspace& affine) {
  ConditionReport report;
  report.condition = ConditionId::codim_one;
  report.verdict = affine.codim() == 1 ? Verdict::holds : Verdict::fails;
  report.detail = "codimension " + std::to_string(affine.codim());
  return report;
}

TransversalityReport check_transversality_equivalence(const AffineSubspace& affine,
                                                      const LatticeCone& cone) {
  require_lattice_instance(affine, cone);
  TransversalityReport out;

  ConditionReport rhs = check_range_cap_cone(affine, cone);
  out.rhs = rhs.verdict == Verdict::holds   ? Verdict::holds
            : rhs.verdict == Verdict::fails ? Verdict::fails
                                            : Verdict::undetermined;

  // N(Q) + S = H iff it contains every -e_j (it contains S, hence every e_j,
  // and the 2N signed basis vectors generate H as a convex cone). Each
  // membership -e_j in N(Q) + S is the LP feasibility of {s >= 0 : Ts = -T e_j}.
  const Index n = affine.dim();
  const Matrix t = affine.rows();
  Verdict lhs = Verdict::holds;
  for (Index j = 0; j < n && lhs == Verdict::holds; ++j) {
    Vector b = -t.col(j);
    LpResult lp;
    try {
      lp = solve_lp(t, b, Vector::Zero(n));
    } catch (const std::exception&) {
      lhs = Verdict::undetermined;
      break;
    }
    if (lp.status == LpStatus::infeasible)
      lhs = Verdict::fails;
    else if (lp.status != LpStatus::optimal)
      lhs = Verdict::undetermined;
  }
  out.lhs = lhs;
  return out;
}

}  // namespace latfeas
