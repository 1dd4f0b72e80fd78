#include "latfeas/sets.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace latfeas {

namespace {

constexpr double kRcondGuard = 1e-12;
constexpr double kUnitNormTol = 1e-12;

// Rejects (numerically) rank-deficient Gram matrices. The guard is on
// lambda_min / lambda_max of the positive semidefinite Gram.
void require_well_conditioned(const Matrix& gram, const char* what) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(hi > 0.0) || lo < kRcondGuard * hi) {
    std::ostringstream msg;
    msg << what << ": rows/generators are not numerically linearly independent"
        << " (rcond " << (hi > 0.0 ? lo / hi : 0.0) << ")";
    throw std::invalid_argument(msg.str());
  }
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

}  // namespace

AffineSubspace::AffineSubspace(Matrix rows, Vector rhs)
    : rows_(std::move(rows)), rhs_(std::move(rhs)) {
  if (rows_.rows() < 1 || rows_.cols() < 1)
    throw std::invalid_argument("AffineSubspace: need at least one row and one column");
  if (rows_.rows() > rows_.cols())
    throw std::invalid_argument("AffineSubspace: codimension exceeds dimension");
  if (rhs_.size() != rows_.rows())
    throw std::invalid_argument("AffineSubspace: rhs size does not match row count");
  require_finite(rows_, "AffineSubspace");
  require_finite(rhs_, "AffineSubspace");

  Matrix gram = rows_ * rows_.transpose();
  require_well_conditioned(gram, "AffineSubspace");
  gram_llt_.compute(gram);
  xbar_ = rows_.transpose() * gram_llt_.solve(rhs_);
}

Vector AffineSubspace::project(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("AffineSubspace::project: dimension mismatch");
  return x + rows_.transpose() * gram_llt_.solve(rhs_ - rows_ * x);
}

Vector AffineSubspace::reflect(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("AffineSubspace::reflect: dimension mismatch");
  return x + 2.0 * (rows_.transpose() * gram_llt_.solve(rhs_ - rows_ * x));
}

Vector AffineSubspace::apply_Q(const Vector& z) const {
  if (z.size() != dim()) throw std::invalid_argument("AffineSubspace::apply_Q: dimension mismatch");
  return rows_.transpose() * gram_llt_.solve(rows_ * z);
}

Matrix AffineSubspace::projector() const {
  return rows_.transpose() * gram_llt_.solve(Matrix(rows_));
}

double AffineSubspace::residual(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("AffineSubspace::residual: dimension mismatch");
  return (rows_ * x - rhs_).norm();
}

SimplicialCone::SimplicialCone(Matrix generators) : gens_(std::move(generators)) {
  if (gens_.rows() < 1 || gens_.cols() < 1)
    throw std::invalid_argument("SimplicialCone: need at least one generator");
  if (gens_.cols() > gens_.rows())
    throw std::invalid_argument("SimplicialCone: more generators than dimensions");
  require_finite(gens_, "SimplicialCone");
  for (Index j = 0; j < gens_.cols(); ++j) {
    if (std::abs(gens_.col(j).norm() - 1.0) > kUnitNormTol)
      throw std::invalid_argument("SimplicialCone: generator " + std::to_string(j) +
                                  " is not unit norm");
  }
  gram_ = gens_.transpose() * gens_;
  require_well_conditioned(gram_, "SimplicialCone");
}

Vector SimplicialCone::project(const Vector& x) const {
  Vector coeffs;
  return project(x, coeffs);
}

// Lawson-Hanson active set over the generator coefficients:
// min ||G lambda - x|| subject to lambda >= 0.
Vector SimplicialCone::project(const Vector& x, Vector& coeffs_out) const {
  if (x.size() != dim()) throw std::invalid_argument("SimplicialCone::project: dimension mismatch");

  const Index k = gens_.cols();
  const Vector gtx = gens_.transpose() * x;
  const double kkt_tol = 1e-12 * std::max(1.0, gtx.cwiseAbs().maxCoeff());

  Vector lambda = Vector::Zero(k);
  std::vector<bool> passive(static_cast<size_t>(k), false);
  Index passive_count = 0;

  auto solve_passive = [&](Vector& z) {
    // Restricted normal equations on the passive set.
    std::vector<Index> idx;
    idx.reserve(static_cast<size_t>(passive_count));
    for (Index i = 0; i < k; ++i)
      if (passive[static_cast<size_t>(i)]) idx.push_back(i);
    const Index p = static_cast<Index>(idx.size());
    Matrix gp(p, p);
    Vector bp(p);
    for (Index r = 0; r < p; ++r) {
      bp[r] = gtx[idx[static_cast<size_t>(r)]];
      for (Index c = 0; c < p; ++c)
        gp(r, c) = gram_(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
    }
    Vector zp = gp.llt().solve(bp);
    z = Vector::Zero(k);
    for (Index r = 0; r < p; ++r) z[idx[static_cast<size_t>(r)]] = zp[r];
  };

  const int cap = 100 + 20 * static_cast<int>(k);
  for (int iter = 0; iter < cap; ++iter) {
    Vector w = gtx - gram_ * lambda;
    Index best = -1;
    double best_w = kkt_tol;
    for (Index i = 0; i < k; ++i) {
      if (!passive[static_cast<size_t>(i)] && w[i] > best_w) {
        best_w = w[i];
        best = i;
      }
    }
    if (best < 0) {
      coeffs_out = lambda;
      return gens_ * lambda;  // KKT satisfied
    }
    passive[static_cast<size_t>(best)] = true;
    ++passive_count;

    for (int inner = 0; inner < cap; ++inner) {
      Vector z;
      solve_passive(z);
      bool interior = true;
      for (Index i = 0; i < k; ++i) {
        if (passive[static_cast<size_t>(i)] && z[i] <= 0.0) {
          interior = false;
          break;
        }
      }
      if (interior) {
        lambda = z;
        break;
      }
      // Step toward z until the first passive coefficient hits zero.
      double alpha = 1.0;
      for (Index i = 0; i < k; ++i) {
        if (passive[static_cast<size_t>(i)] && z[i] <= 0.0) {
          const double denom = lambda[i] - z[i];
          if (denom > 0.0) alpha = std::min(alpha, lambda[i] / denom);
        }
      }
      lambda += alpha * (z - lambda);
      for (Index i = 0; i < k; ++i) {
        if (passive[static_cast<size_t>(i)] && lambda[i] <= kkt_tol) {
          lambda[i] = 0.0;
          passive[static_cast<size_t>(i)] = false;
          --passive_count;
        }
      }
    }
  }
  const double residual = (gens_ * lambda - x).norm();
  std::ostringstream msg;
  msg << "SimplicialCone::project: NNLS iteration cap exceeded (residual " << residual << ")";
  throw std::runtime_error(msg.str());
}

Vector SimplicialCone::coordinates(const Vector& x) const {
  if (x.size() != dim())
    throw std::invalid_argument("SimplicialCone::coordinates: dimension mismatch");
  return gram_.llt().solve(gens_.transpose() * x);
}

Span::Span(Matrix generators) : gens_(std::move(generators)) {
  if (gens_.rows() < 1 || gens_.cols() < 1)
    throw std::invalid_argument("Span: need at least one generator");
  if (gens_.cols() > gens_.rows())
    throw std::invalid_argument("Span: more generators than dimensions");
  require_finite(gens_, "Span");
  Matrix gram = gens_.transpose() * gens_;
  require_well_conditioned(gram, "Span");
  gram_llt_.compute(gram);
}

Vector Span::project(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("Span::project: dimension mismatch");
  return gens_ * gram_llt_.solve(gens_.transpose() * x);
}

Index dim_of(const ConeSpec& cone) {
  return std::visit(
      [](const auto& c) -> Index {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, LatticeCone>)
          return c.dim;
        else
          return c.dim();
      },
      cone);
}

Index dim_of(const ConvexSetSpec& set) {
  return std::visit(
      [](const auto& s) -> Index {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LatticeCone>)
          return s.dim;
        else if constexpr (std::is_same_v<T, PolarOf>)
          return dim_of(s.cone);
        else
          return s.dim();
      },
      set);
}

Vector project(const ConeSpec& cone, const Vector& x) {
  if (x.size() != dim_of(cone)) throw std::invalid_argument("project: dimension mismatch");
  return std::visit(
      [&](const auto& c) -> Vector {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, LatticeCone>)
          return pos_part(x);
        else
          return c.project(x);
      },
      cone);
}

Vector project(const ConvexSetSpec& set, const Vector& x) {
  if (x.size() != dim_of(set)) throw std::invalid_argument("project: dimension mismatch");
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LatticeCone>)
          return pos_part(x);
        else if constexpr (std::is_same_v<T, PolarOf>)
          return project_polar(s.cone, x);
        else
          return s.project(x);
      },
      set);
}

Vector project_polar(const ConeSpec& cone, const Vector& x) {
  return x - project(cone, x);
}

Vector reflect(const ConeSpec& cone, const Vector& x) {
  return 2.0 * project(cone, x) - x;
}

Vector reflect(const ConvexSetSpec& set, const Vector& x) {
  return 2.0 * project(set, x) - x;
}

double dist(const ConeSpec& cone, const Vector& x) {
  return (x - project(cone, x)).norm();
}

double dist(const ConvexSetSpec& set, const Vector& x) {
  return (x - project(set, x)).norm();
}

std::pair<AffineSubspace, LatticeCone> lift_halfspace(const Vector& a, double b) {
  if (a.size() < 1 || a.norm() == 0.0)
    throw std::invalid_argument("lift_halfspace: normal must be nonzero");
  Matrix row(1, a.size() + 1);
  row.leftCols(a.size()) = a.transpose();
  row(0, a.size()) = 1.0;
  Vector rhs(1);
  rhs[0] = b;
  return {AffineSubspace(std::move(row), std::move(rhs)),
          LatticeCone{a.size() + 1}};
}

}  // namespace latfeas
