#include "anomaly/rspace.hpp"

#include <cmath>

namespace anomaly {

RSpace make_rspace(const Mat& conj_matrix, double residual_tol) {
  if (conj_matrix.rows() != conj_matrix.cols())
    throw std::invalid_argument("make_rspace: square matrix required");
  RSpace w{conj_matrix.rows(), conj_matrix};
  if (rspace_invariant_residual(w) > residual_tol)
    throw std::invalid_argument("make_rspace: matrix is not a unitary symmetric structure");
  return w;
}

double rspace_invariant_residual(const RSpace& w) {
  const Eigen::Index n = w.dim;
  Mat id = Mat::Identity(n, n);
  double unit = max_abs(w.conj_matrix.adjoint() * w.conj_matrix - id);
  // involution: C conj(C) = I, equivalent to symmetry of a unitary C
  double invol = max_abs(w.conj_matrix * w.conj_matrix.conjugate() - id);
  return std::max(unit, invol);
}

cxd bilinear_form(const RSpace& w, const Vec& v, const Vec& u) {
  return w.conjugate(v).dot(u);  // Eigen dot conjugates the first argument
}

RSpace opposite(const RSpace& w) { return RSpace{w.dim, -w.conj_matrix}; }

RSpace conjugate_space(const RSpace& w) { return RSpace{w.dim, w.conj_matrix.conjugate()}; }

RSpace direct_sum(const RSpace& a, const RSpace& b) {
  RSpace w;
  w.dim = a.dim + b.dim;
  w.conj_matrix = Mat::Zero(w.dim, w.dim);
  w.conj_matrix.topLeftCorner(a.dim, a.dim) = a.conj_matrix;
  w.conj_matrix.bottomRightCorner(b.dim, b.dim) = b.conj_matrix;
  return w;
}

RSpace flip_space(Eigen::Index v_dim) {
  RSpace w;
  w.dim = 2 * v_dim;
  w.conj_matrix = Mat::Zero(w.dim, w.dim);
  w.conj_matrix.topRightCorner(v_dim, v_dim) = Mat::Identity(v_dim, v_dim);
  w.conj_matrix.bottomLeftCorner(v_dim, v_dim) = Mat::Identity(v_dim, v_dim);
  return w;
}

Mat conjugate_map(const RSpace& w0, const RSpace& w1, const Mat& f) {
  // v -> conj_w1(f(conj_w0(v))) as a matrix: C1 * conj(f) * conj(C0)
  return w1.conj_matrix * f.conjugate() * w0.conj_matrix.conjugate();
}

Mat real_points(const RSpace& w) {
  const Eigen::Index n = w.dim;
  if (n == 0) return Mat(0, 0);
  // Solve (phi - id) v = 0 over R by splitting v = x + i y.  With
  // C = A + i B the fixed-point equation reads
  //   A x + B y = x,   B x - A y = y.
  Eigen::MatrixXd a = w.conj_matrix.real();
  Eigen::MatrixXd b = w.conj_matrix.imag();
  Eigen::MatrixXd sys(2 * n, 2 * n);
  sys.topLeftCorner(n, n) = a - Eigen::MatrixXd::Identity(n, n);
  sys.topRightCorner(n, n) = b;
  sys.bottomLeftCorner(n, n) = b;
  sys.bottomRightCorner(n, n) = -a - Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? sv(0) * 1e-9 : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  Eigen::MatrixXd basis = svd.matrixV().rightCols(2 * n - rank);
  if (basis.cols() != n)
    throw std::runtime_error("real_points: fixed locus has unexpected dimension");
  // columns are real-orthonormal; the Hermitian product is real on fixed
  // points, so they are Hermitian-orthonormal as complex vectors too
  Mat out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    out.col(j) = basis.col(j).topRows(n) + cxd(0, 1) * basis.col(j).bottomRows(n);
  return out;
}

Subspace reference_lagrangian(const RSpace& w) {
  if (w.dim % 2 != 0)
    throw NoLagrangianExists("reference_lagrangian: odd-dimensional space");
  Mat e = real_points(w);
  const Eigen::Index k = w.dim / 2;
  Mat frame(w.dim, k);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < k; ++i)
    frame.col(i) = (e.col(2 * i) - cxd(0, 1) * e.col(2 * i + 1)) * inv_sqrt2;
  Subspace s{w.dim, frame};
  return s;
}

}  // namespace anomaly
