#pragma once

#include "anomaly/linalg.hpp"

namespace anomaly {

// A finite-dimensional complex Hermitian space (standard inner product on
// C^dim, antilinear in the first slot) equipped with an anti-unitary
// involution v -> conj_matrix * conj(v).  Construction enforces that
// conj_matrix is unitary and symmetric, which makes the involution square
// to the identity.
struct RSpace {
  Eigen::Index dim = 0;
  Mat conj_matrix;  // dim x dim

  Vec conjugate(const Vec& v) const { return conj_matrix * v.conjugate(); }
  Mat conjugate_cols(const Mat& m) const { return conj_matrix * m.conjugate(); }
};

RSpace make_rspace(const Mat& conj_matrix, double residual_tol = 1e-12);

// Residuals of the structural invariants (unitarity, involution).
double rspace_invariant_residual(const RSpace& w);

// b(v, w) = <conj(v), w>; symmetric and C-bilinear.
cxd bilinear_form(const RSpace& w, const Vec& v, const Vec& u);

// Same space with the conjugation negated; flips the sign of b.
RSpace opposite(const RSpace& w);

// Entrywise-conjugated structure matrix.
RSpace conjugate_space(const RSpace& w);

RSpace direct_sum(const RSpace& a, const RSpace& b);

// V + dual(V) with the swap conjugation (x, y) -> (conj(y), conj(x)).
// The restriction of b pairs the two summands and vanishes on each.
RSpace flip_space(Eigen::Index v_dim);

// Conjugate of a linear map between structured spaces:
// f_bar(v) = conj_w1(f(conj_w0(v))).
Mat conjugate_map(const RSpace& w0, const RSpace& w1, const Mat& f);

// Orthonormal basis (complex vectors, Hermitian-orthonormal) of the fixed
// points of the conjugation; always dim vectors.
Mat real_points(const RSpace& w);

// Standard Lagrangian span{(e_{2i-1} - i e_{2i})/sqrt(2)} built from a real
// basis; throws if dim is odd.
struct NoLagrangianExists : std::runtime_error {
  using std::runtime_error::runtime_error;
};
Subspace reference_lagrangian(const RSpace& w);

}  // namespace anomaly
