#include "anomaly/lagrangian.hpp"

#include <cmath>

namespace anomaly {

RSpace relation_ambient(const LagrangianRelation& l) {
  return direct_sum(l.w_left, opposite(l.w_right));
}

IsLagrangianReport is_lagrangian(const RSpace& w, const Subspace& s, const Tol& tol) {
  IsLagrangianReport rep;
  rep.dim_ok = (w.dim % 2 == 0) && (s.dim() == w.dim / 2) && (s.ambient == w.dim);
  Mat conj_frame = w.conjugate_cols(s.frame);
  rep.residual = max_abs(conj_frame.adjoint() * s.frame);
  rep.pass = rep.dim_ok && rep.residual <= tol.residual_tol;
  return rep;
}

Subspace conjugate_subspace(const RSpace& w, const Subspace& s) {
  return Subspace{s.ambient, w.conjugate_cols(s.frame)};
}

LagrangianRelation graph_lagrangian(const RSpace& w0, const RSpace& w1, const Mat& q,
                                    const Tol& tol) {
  if (w0.dim != w1.dim || q.rows() != w1.dim || q.cols() != w0.dim)
    throw NotAGraphLagrangian("graph_lagrangian: dimension mismatch");
  if (w0.dim == 0) {
    LagrangianRelation l{w0, w1, zero_subspace(0)};
    return l;
  }
  SvdResult sv = svd_thin(q);
  if (sv.sv(sv.sv.size() - 1) <= sv.sv(0) * tol.rank_tol)
    throw NotAGraphLagrangian("graph_lagrangian: matrix not invertible");
  Mat qbar = conjugate_map(w0, w1, q);
  double scale = std::max(1.0, max_abs(q) * max_abs(qbar));
  double res = max_abs(q.adjoint() * qbar - Mat::Identity(w0.dim, w0.dim));
  if (res > tol.residual_tol * scale)
    throw NotAGraphLagrangian("graph_lagrangian: adjoint is not the inverse of the conjugate");
  Mat cols(2 * w0.dim, w0.dim);
  cols.topRows(w0.dim) = Mat::Identity(w0.dim, w0.dim);
  cols.bottomRows(w0.dim) = q;
  LagrangianRelation l{w0, w1, orthonormalize(cols, tol.rank_tol)};
  // the operator-level test above is scale-sensitive; the orthonormal frame
  // is the authoritative certificate
  if (!is_lagrangian(relation_ambient(l), l.space, tol).pass)
    throw NotAGraphLagrangian("graph_lagrangian: graph is not lagrangian");
  return l;
}

namespace {

// Frame of {w in w_mid : (0, w) in rel} for a relation frame split as
// (zero_rows | mid_rows): kernel of the zero block, pushed to mid coords.
Subspace one_sided_slice(const Mat& frame, Eigen::Index zero_off, Eigen::Index zero_dim,
                         Eigen::Index mid_off, Eigen::Index mid_dim, double rank_tol) {
  Subspace coeff = kernel(Mat(frame.middleRows(zero_off, zero_dim)), rank_tol);
  Mat vecs = frame.middleRows(mid_off, mid_dim) * coeff.frame;
  return orthonormalize(vecs, rank_tol);
}

}  // namespace

CompositionResult compose(const LagrangianRelation& l01, const LagrangianRelation& l12,
                          const Tol& tol) {
  const Eigen::Index d0 = l01.w_left.dim;
  const Eigen::Index d1 = l01.w_right.dim;
  const Eigen::Index d2 = l12.w_right.dim;
  if (l12.w_left.dim != d1 ||
      max_abs(l12.w_left.conj_matrix - l01.w_right.conj_matrix) > 1e-12)
    throw std::invalid_argument("compose: middle spaces do not match");

  CompositionResult out;
  const Eigen::Index k01 = l01.space.dim();
  const Eigen::Index k12 = l12.space.dim();

  // L = l01 + l12 inside the four-block ambient (w0, w1, w1, w2).
  Mat lframe = Mat::Zero(d0 + 2 * d1 + d2, k01 + k12);
  lframe.block(0, 0, d0 + d1, k01) = l01.space.frame;
  lframe.block(d0 + d1, k01, d1 + d2, k12) = l12.space.frame;

  // sigma(v0, v1, v1p, v2) = v1 - v1p, restricted to L.
  Mat sigma_l = lframe.middleRows(d0, d1) - lframe.middleRows(d0 + d1, d1);

  Subspace ker_coeff = kernel(sigma_l, tol.rank_tol);
  out.l_sigma_dim = ker_coeff.dim();

  out.closedness_margin = std::numeric_limits<double>::infinity();
  if (sigma_l.rows() > 0 && sigma_l.cols() > 0) {
    SvdResult sv = svd_thin(sigma_l);
    const double cut = sv.sv.size() ? sv.sv(0) * tol.rank_tol : 0.0;
    for (Eigen::Index i = sv.sv.size() - 1; i >= 0; --i) {
      if (sv.sv(i) > cut) {
        out.closedness_margin = sv.sv(i);
        break;
      }
    }
  }

  Mat l_sigma = lframe * ker_coeff.frame;  // orthonormal columns
  Mat proj(d0 + d2, l_sigma.cols());
  proj.topRows(d0) = l_sigma.topRows(d0);
  proj.bottomRows(d2) = l_sigma.bottomRows(d2);

  out.composed.w_left = l01.w_left;
  out.composed.w_right = l12.w_right;
  out.composed.space = orthonormalize(proj, tol.rank_tol);

  Subspace a = one_sided_slice(l01.space.frame, 0, d0, d0, d1, tol.rank_tol);
  Subspace b = one_sided_slice(l12.space.frame, d1, d2, 0, d1, tol.rank_tol);
  a.ambient = d1;
  b.ambient = d1;
  out.k_space = intersect(a, b, tol.rank_tol);

  out.composed_report = is_lagrangian(relation_ambient(out.composed), out.composed.space, tol);
  out.dim_identity_ok =
      out.composed.space.dim() == out.l_sigma_dim - out.k_space.dim();
  return out;
}

SplittingReport splitting_check(const LagrangianRelation& l01, const LagrangianRelation& l12,
                                const Tol& tol) {
  const Eigen::Index d0 = l01.w_left.dim;
  const Eigen::Index d1 = l01.w_right.dim;
  const Eigen::Index d2 = l12.w_right.dim;
  const Eigen::Index n = d0 + 2 * d1 + d2;

  RSpace w = direct_sum(direct_sum(l01.w_left, opposite(l01.w_right)),
                        direct_sum(l12.w_left, opposite(l12.w_right)));

  Mat lframe = Mat::Zero(n, l01.space.dim() + l12.space.dim());
  lframe.block(0, 0, d0 + d1, l01.space.dim()) = l01.space.frame;
  lframe.block(d0 + d1, l01.space.dim(), d1 + d2, l12.space.dim()) = l12.space.frame;
  Subspace l{n, lframe};

  Mat sigma_l = lframe.middleRows(d0, d1) - lframe.middleRows(d0 + d1, d1);
  Subspace ker_coeff = kernel(sigma_l, tol.rank_tol);
  Subspace l_sigma{n, lframe * ker_coeff.frame};

  // U = {(0, w, w, 0)}, normalized.
  Mat uframe = Mat::Zero(n, d1);
  uframe.middleRows(d0, d1) = Mat::Identity(d1, d1) / std::sqrt(2.0);
  uframe.middleRows(d0 + d1, d1) = Mat::Identity(d1, d1) / std::sqrt(2.0);

  Mat ubar = w.conjugate_cols(uframe);
  Subspace pl_ubar = orthonormalize(l.projector() * ubar, tol.rank_tol);
  Subspace lbar_sigma{n, w.conjugate_cols(l_sigma.frame)};
  Subspace lbar{n, w.conjugate_cols(lframe)};
  Subspace plbar_u = orthonormalize(lbar.projector() * uframe, tol.rank_tol);

  SplittingReport rep;
  rep.dim_l_sigma = l_sigma.dim();
  rep.dim_pl_ubar = pl_ubar.dim();
  rep.dim_lbar_sigma = lbar_sigma.dim();
  rep.dim_plbar_u = plbar_u.dim();

  const Subspace* parts[4] = {&l_sigma, &pl_ubar, &lbar_sigma, &plbar_u};
  double res = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      res = std::max(res, max_abs(parts[i]->frame.adjoint() * parts[j]->frame));
  rep.orthogonality_residual = res;
  rep.dims_sum_ok =
      rep.dim_l_sigma + rep.dim_pl_ubar + rep.dim_lbar_sigma + rep.dim_plbar_u == n;
  rep.pass = rep.dims_sum_ok && res <= tol.residual_tol;
  return rep;
}

LagrangianRelation qalpha_lagrangian(double alpha, Eigen::Index n, const Tol& tol) {
  const Eigen::Index d = 2 * n + 1;
  Mat rev = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) rev(d - 1 - i, i) = 1.0;
  RSpace w = make_rspace(rev);
  // Assembled directly: the weights span enough orders of magnitude at large
  // n to fail any generic invertibility cut, yet the normalized graph columns
  // are exactly orthonormal.
  Mat frame = Mat::Zero(2 * d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double lam = std::exp(alpha * static_cast<double>(i - n));
    const double nrm = std::hypot(1.0, lam);
    frame(i, i) = 1.0 / nrm;
    frame(d + i, i) = lam / nrm;
  }
  LagrangianRelation l{w, w, Subspace{2 * d, frame}};
  IsLagrangianReport rep = is_lagrangian(relation_ambient(l), l.space, tol);
  if (!rep.pass) throw NotAGraphLagrangian("weight family frame is not lagrangian");
  return l;
}

ClosenessReport closeness(const Subspace& s1, const Subspace& s2) {
  ClosenessReport rep;
  Mat d = s1.projector() - s2.projector();
  if (d.rows() == 0) return rep;
  SvdResult sv = svd_thin(d);
  rep.singular_values.assign(sv.sv.data(), sv.sv.data() + sv.sv.size());
  rep.operator_norm = rep.singular_values.empty() ? 0.0 : rep.singular_values.front();
  return rep;
}

}  // namespace anomaly
