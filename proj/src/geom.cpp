#include "dramsey/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dramsey/error.hpp"

namespace dramsey {

Configuration::Configuration(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 1) {
    throw Error(ErrorCode::InvalidArgument, "configuration dimension must be positive");
  }
  if (points_.cols() < 1) {
    throw Error(ErrorCode::InvalidArgument, "configuration must contain at least one point");
  }
  if (!points_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "configuration coordinates must be finite");
  }
}

namespace {

Matrix rows_to_matrix(std::size_t dim, const std::vector<std::vector<double>>& rows) {
  Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != dim) {
      throw Error(ErrorCode::InvalidArgument,
                  "point " + std::to_string(j) + " has " + std::to_string(rows[j].size()) +
                      " coordinates, expected " + std::to_string(dim));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[j][i];
    }
  }
  return m;
}

}  // namespace

Configuration::Configuration(std::size_t dim, const std::vector<std::vector<double>>& rows)
    : Configuration(rows_to_matrix(dim, rows)) {}

std::vector<std::vector<double>> Configuration::rows() const {
  std::vector<std::vector<double>> out(size(), std::vector<double>(dim()));
  for (std::size_t j = 0; j < size(); ++j) {
    for (std::size_t i = 0; i < dim(); ++i) {
      out[j][i] = points_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

Configuration Configuration::scaled(double factor) const {
  return Configuration(Matrix(points_ * factor));
}

RigidMotion::RigidMotion(Matrix rotation, Vector translation, double tol)
    : rotation_(std::move(rotation)), translation_(std::move(translation)) {
  if (rotation_.rows() != rotation_.cols() || rotation_.rows() != translation_.size()) {
    throw Error(ErrorCode::InvalidArgument, "rigid motion shape mismatch");
  }
  if (!rotation_.allFinite() || !translation_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "rigid motion entries must be finite");
  }
  const Eigen::Index d = rotation_.rows();
  const double defect =
      (rotation_.transpose() * rotation_ - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > tol) {
    throw Error(ErrorCode::NonOrthogonal,
                "rotation is not orthogonal (max |R^T R - I| = " + std::to_string(defect) + ")");
  }
}

RigidMotion RigidMotion::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return RigidMotion(Matrix::Identity(d, d), Vector::Zero(d));
}

RigidMotion RigidMotion::inverse() const {
  Matrix rt = rotation_.transpose();
  Vector t = -(rt * translation_);
  return RigidMotion(std::move(rt), std::move(t));
}

RigidMotion RigidMotion::compose(const RigidMotion& other) const {
  if (other.dim() != dim()) {
    throw Error(ErrorCode::InvalidArgument, "cannot compose motions of different dimension");
  }
  return RigidMotion(rotation_ * other.rotation_, rotation_ * other.translation_ + translation_);
}

DistanceMatrix::DistanceMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(ErrorCode::InvalidArgument, "distance matrix must be square");
  }
  if (!entries_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "distance matrix entries must be finite");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0.0) {
      throw Error(ErrorCode::InvalidArgument, "distance matrix diagonal must be zero");
    }
    for (Eigen::Index j = 0; j < i; ++j) {
      if (entries_(i, j) != entries_(j, i) || entries_(i, j) < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "distance matrix must be symmetric and nonnegative");
      }
    }
  }
}

double diameter(const Configuration& c) {
  double best = 0.0;
  const auto& p = c.points();
  for (Eigen::Index i = 0; i < p.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < p.cols(); ++j) {
      best = std::max(best, (p.col(i) - p.col(j)).squaredNorm());
    }
  }
  return std::sqrt(best);
}

DistanceMatrix distance_matrix(const Configuration& c) {
  const auto& p = c.points();
  const Eigen::Index n = p.cols();
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = (p.col(i) - p.col(j)).norm();
    }
  }
  return DistanceMatrix(std::move(d));
}

Configuration apply_motion(const Configuration& c, const RigidMotion& m) {
  if (m.dim() != c.dim()) {
    throw Error(ErrorCode::InvalidArgument, "motion dimension does not match configuration");
  }
  Matrix out = m.rotation() * c.points();
  out.colwise() += m.translation();
  return Configuration(std::move(out));
}

namespace {

class CongruenceSearch {
 public:
  CongruenceSearch(const Matrix& da, const Matrix& db, double tol)
      : da_(da), db_(db), tol_(tol), n_(da.rows()) {}

  bool run() {
    // Candidates per point of `a`: points of `b` whose sorted distance row
    // matches. Points with the fewest candidates are placed first.
    std::vector<std::vector<double>> ra(n_), rb(n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      ra[i] = sorted_row(da_, i);
      rb[i] = sorted_row(db_, i);
    }
    candidates_.assign(n_, {});
    for (Eigen::Index i = 0; i < n_; ++i) {
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (rows_match(ra[i], rb[j])) candidates_[i].push_back(j);
      }
      if (candidates_[i].empty()) return false;
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Eigen::Index{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Eigen::Index x, Eigen::Index y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    image_.assign(n_, -1);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  static std::vector<double> sorted_row(const Matrix& d, Eigen::Index i) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(d.cols()));
    for (Eigen::Index j = 0; j < d.cols(); ++j) row.push_back(d(i, j));
    std::sort(row.begin(), row.end());
    return row;
  }

  bool rows_match(const std::vector<double>& x, const std::vector<double>& y) const {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (std::abs(x[k] - y[k]) > tol_) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Eigen::Index i = order_[depth];
    for (Eigen::Index j : candidates_[i]) {
      if (used_[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Eigen::Index prev = order_[k];
        ok = std::abs(da_(i, prev) - db_(j, image_[prev])) <= tol_;
      }
      if (!ok) continue;
      image_[i] = j;
      used_[j] = true;
      if (extend(depth + 1)) return true;
      used_[j] = false;
      image_[i] = -1;
    }
    return false;
  }

  const Matrix& da_;
  const Matrix& db_;
  double tol_;
  Eigen::Index n_;
  std::vector<std::vector<Eigen::Index>> candidates_;
  std::vector<Eigen::Index> order_;
  std::vector<Eigen::Index> image_;
  std::vector<bool> used_;
};

}  // namespace

bool is_congruent(const Configuration& a, const Configuration& b, double tol) {
  if (a.size() != b.size()) return false;
  const Matrix da = distance_matrix(a).entries();
  const Matrix db = distance_matrix(b).entries();

  // Cheap rejection on the multiset of all pairwise distances.
  std::vector<double> sa(da.data(), da.data() + da.size());
  std::vector<double> sb(db.data(), db.data() + db.size());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t k = 0; k < sa.size(); ++k) {
    if (std::abs(sa[k] - sb[k]) > tol) return false;
  }
  return CongruenceSearch(da, db, tol).run();
}

namespace {

Matrix difference_matrix(const Configuration& c) {
  const auto& p = c.points();
  Matrix diff(p.rows(), p.cols() - 1);
  for (Eigen::Index j = 1; j < p.cols(); ++j) diff.col(j - 1) = p.col(j) - p.col(0);
  return diff;
}

}  // namespace

Matrix affine_hull_basis(const Configuration& c, double tol) {
  const auto d = static_cast<Eigen::Index>(c.dim());
  if (c.size() < 2) return Matrix(d, 0);
  const Matrix diff = difference_matrix(c);
  Eigen::JacobiSVD<Matrix> svd(diff, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return Matrix(d, 0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol * sv(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

std::size_t affine_dimension(const Configuration& c, double tol) {
  return static_cast<std::size_t>(affine_hull_basis(c, tol).cols());
}

double spread(const Configuration& c) {
  const Vector norms = c.points().colwise().norm().transpose();
  return norms.maxCoeff() - norms.minCoeff();
}

}  // namespace dramsey
