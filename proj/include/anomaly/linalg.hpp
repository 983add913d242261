#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace anomaly {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Shared numerical policy. rank_tol is a relative cut on singular values,
// residual_tol an absolute bound on residuals of exact identities.
struct Tol {
  double rank_tol = 1e-9;
  double residual_tol = 1e-9;
};

struct SvdResult {
  Mat u;               // thin left vectors
  Eigen::VectorXd sv;  // descending
  Mat v;               // thin right vectors
};

SvdResult svd_thin(const Mat& a);

// A subspace of C^n held as an orthonormal column frame (n x d).
struct Subspace {
  Eigen::Index ambient = 0;
  Mat frame;  // ambient x dim, orthonormal columns

  Eigen::Index dim() const { return frame.cols(); }
  Mat projector() const { return frame * frame.adjoint(); }
};

Subspace zero_subspace(Eigen::Index ambient);
Subspace full_subspace(Eigen::Index ambient);

// Span of the columns of `cols`, with singular values below
// rank_tol * max_sv discarded.
Subspace orthonormalize(const Mat& cols, double rank_tol);

// Right null space of m (columns spanning {x : m x = 0}).
Subspace kernel(const Mat& m, double rank_tol);

Subspace intersect(const Subspace& s1, const Subspace& s2, double rank_tol);
Subspace subspace_sum(const Subspace& s1, const Subspace& s2, double rank_tol);
Subspace orthogonal_complement(const Subspace& s, double rank_tol);

Vec project(const Subspace& s, const Vec& v);

// Largest singular value of p1 - p2; the operator-norm distance of projectors.
double projector_distance(const Subspace& s1, const Subspace& s2);

bool subspace_equal(const Subspace& s1, const Subspace& s2, double residual_tol);

// true iff v lies in s up to residual_tol (relative to |v|).
bool contains(const Subspace& s, const Vec& v, double residual_tol);

// true iff every column of sub lies in s.
bool contains_all(const Subspace& s, const Mat& sub, double residual_tol);

// Principal angles in radians, ascending; min(dim1, dim2) of them.
std::vector<double> principal_angles(const Subspace& s1, const Subspace& s2);

double max_abs(const Mat& m);

}  // namespace anomaly
