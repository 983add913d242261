#pragma once

#include "anomaly/rspace.hpp"

#include <limits>

namespace anomaly {

struct NotAGraphLagrangian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Lagrangian subspace of w_left + opposite(w_right), stored with the
// factor split so relation composition knows the shared middle space.
// Either factor may have dimension zero.
struct LagrangianRelation {
  RSpace w_left;
  RSpace w_right;
  Subspace space;  // ambient dim = w_left.dim + w_right.dim
};

RSpace relation_ambient(const LagrangianRelation& l);

struct IsLagrangianReport {
  bool dim_ok = false;
  double residual = 0.0;  // max |<conj(frame_i), frame_j>|
  bool pass = false;
};

// s is Lagrangian iff dim s = dim w / 2 and conj(s) is orthogonal to s.
IsLagrangianReport is_lagrangian(const RSpace& w, const Subspace& s, const Tol& tol);

// Image of a subspace under the anti-unitary conjugation (stays orthonormal).
Subspace conjugate_subspace(const RSpace& w, const Subspace& s);

// {(v, q v) : v in w0}; requires q invertible with q^* = conj_map(q)^{-1}.
LagrangianRelation graph_lagrangian(const RSpace& w0, const RSpace& w1, const Mat& q,
                                    const Tol& tol);

struct CompositionResult {
  LagrangianRelation composed;     // in w0 + opposite(w2)
  Subspace k_space;                // in w1: both-sided null directions
  Eigen::Index l_sigma_dim = 0;    // dim of ker(sigma) within l01 + l12
  double closedness_margin = 0.0;  // smallest nonzero singular value of sigma|_L
  IsLagrangianReport composed_report;
  bool dim_identity_ok = false;  // dim composed = dim l_sigma - dim k
};

// Relation composition through the shared middle space, with the standard
// auxiliary data: sigma(v0, v1, v1p, v2) = v1 - v1p on the four-block sum.
CompositionResult compose(const LagrangianRelation& l01, const LagrangianRelation& l12,
                          const Tol& tol);

struct SplittingReport {
  Eigen::Index dim_l_sigma = 0;
  Eigen::Index dim_pl_ubar = 0;
  Eigen::Index dim_lbar_sigma = 0;
  Eigen::Index dim_plbar_u = 0;
  double orthogonality_residual = 0.0;
  bool dims_sum_ok = false;
  bool pass = false;
};

// Checks that the four-block ambient splits orthogonally as
// l_sigma + P_L(conj U) + conj(l_sigma) + P_{conj L}(U).
SplittingReport splitting_check(const LagrangianRelation& l01, const LagrangianRelation& l12,
                                const Tol& tol);

// Exponential-weight graph family on the (2n+1)-dimensional space with the
// index-reversing conjugation: q e_j = exp(alpha * (j - n)) e_j.
LagrangianRelation qalpha_lagrangian(double alpha, Eigen::Index n, const Tol& tol);

struct ClosenessReport {
  double operator_norm = 0.0;
  std::vector<double> singular_values;  // of P1 - P2, descending
};

ClosenessReport closeness(const Subspace& s1, const Subspace& s2);

}  // namespace anomaly
