#include "anomaly/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace anomaly {

SvdResult svd_thin(const Mat& a) {
  SvdResult r;
  if (a.rows() == 0 || a.cols() == 0) {
    r.u = Mat(a.rows(), 0);
    r.sv = Eigen::VectorXd(0);
    r.v = Mat(a.cols(), 0);
    return r;
  }
  // Jacobi is the most accurate option and all our matrices are small;
  // fall back to BDC when a side gets large.
  if (std::min(a.rows(), a.cols()) <= 64) {
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    r.u = svd.matrixU();
    r.sv = svd.singularValues();
    r.v = svd.matrixV();
  } else {
    Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    r.u = svd.matrixU();
    r.sv = svd.singularValues();
    r.v = svd.matrixV();
  }
  return r;
}

Subspace zero_subspace(Eigen::Index ambient) {
  return Subspace{ambient, Mat(ambient, 0)};
}

Subspace full_subspace(Eigen::Index ambient) {
  return Subspace{ambient, Mat::Identity(ambient, ambient)};
}

Subspace orthonormalize(const Mat& cols, double rank_tol) {
  Subspace s;
  s.ambient = cols.rows();
  if (cols.cols() == 0) {
    s.frame = Mat(cols.rows(), 0);
    return s;
  }
  SvdResult r = svd_thin(cols);
  Eigen::Index rank = 0;
  const double cut = r.sv.size() ? r.sv(0) * rank_tol : 0.0;
  for (Eigen::Index i = 0; i < r.sv.size(); ++i)
    if (r.sv(i) > cut) ++rank;
  s.frame = r.u.leftCols(rank);
  return s;
}

Subspace kernel(const Mat& m, double rank_tol) {
  Subspace s;
  s.ambient = m.cols();
  if (m.rows() == 0 || m.cols() == 0) {
    s.frame = Mat::Identity(m.cols(), m.cols());
    return s;
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? sv(0) * rank_tol : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  s.frame = svd.matrixV().rightCols(m.cols() - rank);
  return s;
}

Subspace intersect(const Subspace& s1, const Subspace& s2, double rank_tol) {
  if (s1.ambient != s2.ambient) throw std::invalid_argument("intersect: ambient mismatch");
  const Eigen::Index n = s1.ambient;
  if (s1.dim() == 0 || s2.dim() == 0) return zero_subspace(n);
  // x in both spaces iff (I - P1) x = 0 and (I - P2) x = 0.
  Mat stacked(2 * n, n);
  stacked.topRows(n) = Mat::Identity(n, n) - s1.projector();
  stacked.bottomRows(n) = Mat::Identity(n, n) - s2.projector();
  Subspace ker = kernel(stacked, rank_tol);
  // kernel() uses a relative cut on stacked's singular values whose largest is
  // O(1) here, so the cut acts as an absolute angle threshold as intended.
  return ker;
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2, double rank_tol) {
  if (s1.ambient != s2.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
  Mat cols(s1.ambient, s1.dim() + s2.dim());
  cols.leftCols(s1.dim()) = s1.frame;
  cols.rightCols(s2.dim()) = s2.frame;
  return orthonormalize(cols, rank_tol);
}

Subspace orthogonal_complement(const Subspace& s, double rank_tol) {
  return kernel(Mat(s.frame.adjoint()), rank_tol);
}

Vec project(const Subspace& s, const Vec& v) {
  return s.frame * (s.frame.adjoint() * v);
}

double projector_distance(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient != s2.ambient) throw std::invalid_argument("projector_distance: ambient mismatch");
  Mat d = s1.projector() - s2.projector();
  if (d.rows() == 0) return 0.0;
  SvdResult r = svd_thin(d);
  return r.sv.size() ? r.sv(0) : 0.0;
}

bool subspace_equal(const Subspace& s1, const Subspace& s2, double residual_tol) {
  return s1.ambient == s2.ambient && s1.dim() == s2.dim() &&
         projector_distance(s1, s2) <= residual_tol;
}

bool contains(const Subspace& s, const Vec& v, double residual_tol) {
  double nv = v.norm();
  if (nv == 0.0) return true;
  return (v - project(s, v)).norm() <= residual_tol * std::max(1.0, nv);
}

bool contains_all(const Subspace& s, const Mat& sub, double residual_tol) {
  for (Eigen::Index j = 0; j < sub.cols(); ++j)
    if (!contains(s, sub.col(j), residual_tol)) return false;
  return true;
}

std::vector<double> principal_angles(const Subspace& s1, const Subspace& s2) {
  Mat overlap = s1.frame.adjoint() * s2.frame;
  SvdResult r = svd_thin(overlap);
  std::vector<double> angles(r.sv.size());
  for (Eigen::Index i = 0; i < r.sv.size(); ++i) {
    double c = std::clamp(r.sv(i), 0.0, 1.0);
    angles[i] = std::acos(c);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double max_abs(const Mat& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      best = std::max(best, std::abs(m(i, j)));
  return best;
}

}  // namespace anomaly
