#include "anomaly/gluing.hpp"

#include <bit>
#include <random>

namespace anomaly {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

Vec embed(Eigen::Index total, Eigen::Index offset, const Vec& v) {
  Vec out = Vec::Zero(total);
  out.segment(offset, v.size()) = v;
  return out;
}

}  // namespace

Mat TensorOverClifford::relation_op(const Vec& v_mid) const {
  Eigen::Index d0 = l01.w_left.dim, d1 = l01.w_right.dim;
  Mat a01 = f01.generator_action(embed(d0 + d1, d0, -v_mid));
  Mat a12 = f12.generator_action(embed(d1 + l12.w_right.dim, 0, v_mid));
  return kron(a01, Mat::Identity(f12.dim(), f12.dim())) + kron(f01.grading, a12);
}

Mat TensorOverClifford::outer_op_full(const Vec& w0, const Vec& w2) const {
  Eigen::Index d0 = l01.w_left.dim, d1 = l01.w_right.dim, d2 = l12.w_right.dim;
  Mat a01 = f01.generator_action(embed(d0 + d1, 0, w0));
  Mat a12 = f12.generator_action(embed(d1 + d2, d1, w2));
  return kron(a01, Mat::Identity(f12.dim(), f12.dim())) + kron(f01.grading, a12);
}

Mat TensorOverClifford::outer_op(const Vec& w0, const Vec& w2) const {
  Mat full = outer_op_full(w0, w2);
  return reduced.frame.adjoint() * full * reduced.frame;
}

double TensorOverClifford::invariance_residual(const Mat& op_full) const {
  Mat compressed = reduced.frame.adjoint() * op_full * reduced.frame;
  return max_abs(op_full * reduced.frame - reduced.frame * compressed);
}

TensorOverClifford tensor_over_clifford(const LagrangianRelation& l01,
                                        const LagrangianRelation& l12, const Tol& tol) {
  if (l01.w_right.dim != l12.w_left.dim ||
      max_abs(l01.w_right.conj_matrix - l12.w_left.conj_matrix) > 1e-12)
    throw std::invalid_argument("tensor_over_clifford: middle spaces differ");
  TensorOverClifford tc;
  tc.l01 = l01;
  tc.l12 = l12;
  tc.f01 = make_fock(relation_ambient(l01), l01.space, tol);
  tc.f12 = make_fock(relation_ambient(l12), l12.space, tol);

  Eigen::Index full = tc.f01.dim() * tc.f12.dim();
  Eigen::Index d1 = l01.w_right.dim;
  Mat frame = Mat::Identity(full, full);
  for (Eigen::Index j = 0; j < d1; ++j) {
    Vec v = Vec::Zero(d1);
    v(j) = 1.0;
    Mat constraint = tc.relation_op(v).adjoint() * frame;
    Subspace coeff = kernel(constraint, tol.rank_tol);
    frame = frame * coeff.frame;
  }
  tc.reduced = Subspace{full, frame};
  return tc;
}

Vec generator_image(const TensorOverClifford& tc, const std::vector<Vec>& words) {
  Vec g = tc.f01.vacuum();
  for (const Vec& w : words) g = right_act(tc.f01, tc.l01, w) * g;
  Vec full = Vec::Zero(tc.full_dim());
  for (Eigen::Index a = 0; a < tc.f01.dim(); ++a) full(a * tc.f12.dim()) = g(a);
  return tc.to_reduced(full);
}

Mat alpha_from_generator(const TensorOverClifford& tc, const Subspace& source_l,
                         const Vec& gen_reduced) {
  Eigen::Index k = source_l.dim();
  Eigen::Index d0 = tc.l01.w_left.dim, d2 = tc.l12.w_right.dim;
  if (source_l.ambient != d0 + d2)
    throw std::invalid_argument("alpha_from_generator: source ambient mismatch");
  std::vector<Mat> ops;
  ops.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) {
    Vec col = source_l.frame.col(j);
    ops.push_back(tc.outer_op(col.head(d0), col.tail(d2)));
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << k); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  Mat alpha(tc.reduced_dim(), Eigen::Index(1) << k);
  for (Eigen::Index s = 0; s < alpha.cols(); ++s) {
    Vec col = gen_reduced;
    for (Eigen::Index j = k - 1; j >= 0; --j)
      if (masks[static_cast<std::size_t>(s)] >> j & 1u) col = ops[static_cast<std::size_t>(j)] * col;
    alpha.col(s) = col;
  }
  return alpha;
}

GlueResult glue_iso(const LagrangianRelation& l01, const LagrangianRelation& l12,
                    const Tol& tol) {
  GlueResult g;
  g.comp = compose(l01, l12, tol);
  if (!g.comp.composed_report.pass)
    throw CompositionNotLagrangian("glue_iso: composite fails the lagrangian test");
  g.tensor = tensor_over_clifford(l01, l12, tol);
  g.k_basis = g.comp.k_space.frame;
  std::vector<Vec> words;
  for (Eigen::Index j = 0; j < g.k_basis.cols(); ++j) words.push_back(g.k_basis.col(j));
  g.generator = generator_image(g.tensor, words);
  if (g.generator.norm() <= tol.residual_tol)
    throw GluingDegenerate("glue_iso: generator image vanishes");
  g.f02 = make_fock(relation_ambient(g.comp.composed), g.comp.composed.space, tol);
  g.alpha = alpha_from_generator(g.tensor, g.comp.composed.space, g.generator);
  return g;
}

GlueReport verify_glue(const GlueResult& g, const Tol& tol) {
  GlueReport rep;
  const TensorOverClifford& tc = g.tensor;
  Eigen::Index d0 = tc.l01.w_left.dim, d2 = tc.l12.w_right.dim;
  Eigen::Index k02 = g.comp.composed.space.dim();
  rep.reduced_dim = tc.reduced_dim();
  rep.expected_reduced_dim = Eigen::Index(1) << k02;
  rep.generator_norm = g.generator.norm();

  SvdResult s = svd_thin(g.alpha);
  rep.sigma_min = (rep.reduced_dim == rep.expected_reduced_dim && s.sv.size() > 0)
                      ? s.sv(s.sv.size() - 1)
                      : 0.0;

  RSpace amb02 = relation_ambient(g.comp.composed);
  for (Eigen::Index i = 0; i < d0 + d2; ++i) {
    Vec w = Vec::Zero(d0 + d2);
    w(i) = 1.0;
    Mat m_side = g.f02.generator_action(w);
    Mat t_side = tc.outer_op(w.head(d0), w.tail(d2));
    rep.intertwine_residual =
        std::max(rep.intertwine_residual, max_abs(g.alpha * m_side - t_side * g.alpha));
    rep.invariance_residual = std::max(
        rep.invariance_residual, tc.invariance_residual(tc.outer_op_full(w.head(d0), w.tail(d2))));
  }

  for (Eigen::Index j = 0; j < k02; ++j) {
    Vec cl = amb02.conjugate(g.comp.composed.space.frame.col(j));
    Vec hit = tc.outer_op(cl.head(d0), cl.tail(d2)) * g.generator;
    rep.generator_annihilation_residual =
        std::max(rep.generator_annihilation_residual, hit.lpNorm<Eigen::Infinity>());
  }

  Eigen::Index n = g.k_basis.cols();
  for (Eigen::Index kk = 0; kk < n; ++kk) {
    std::vector<Vec> prefix;
    for (Eigen::Index j = 0; j < kk; ++j) prefix.push_back(g.k_basis.col(j));
    Vec sub = generator_image(tc, prefix);
    rep.subtop_residual = std::max(rep.subtop_residual, sub.lpNorm<Eigen::Infinity>());
    if (kk == 0) rep.vacuum_norm = sub.norm();
  }
  if (n == 0) rep.vacuum_norm = rep.generator_norm;

  ModuleRep mrep;
  mrep.dim = tc.reduced_dim();
  mrep.act = [&tc, d0, d2](const Vec& v) { return tc.outer_op(v.head(d0), v.tail(d2)); };
  rep.pf_dim = pfaffian_line(amb02, g.comp.composed.space, mrep, tol.rank_tol).dim();

  rep.pass = rep.reduced_dim == rep.expected_reduced_dim && rep.sigma_min > tol.rank_tol &&
             rep.intertwine_residual <= tol.residual_tol &&
             rep.generator_annihilation_residual <= tol.residual_tol &&
             rep.subtop_residual <= tol.residual_tol &&
             rep.invariance_residual <= tol.residual_tol && rep.pf_dim == 1;
  return rep;
}

ChainSpaces k_spaces(const LagrangianRelation& l01, const LagrangianRelation& l12,
                     const LagrangianRelation& l23, const Tol& tol) {
  ChainSpaces ch;
  ch.l01 = l01;
  ch.l12 = l12;
  ch.l23 = l23;
  ch.comp02 = compose(l01, l12, tol);
  ch.comp13 = compose(l12, l23, tol);
  if (!ch.comp02.composed_report.pass || !ch.comp13.composed_report.pass)
    throw CompositionNotLagrangian("k_spaces: adjacent composite fails the lagrangian test");
  ch.l02 = ch.comp02.composed;
  ch.l13 = ch.comp13.composed;
  ch.comp03 = compose(ch.l02, l23, tol);
  ch.comp03_via13 = compose(l01, ch.l13, tol);
  if (!ch.comp03.composed_report.pass || !ch.comp03_via13.composed_report.pass)
    throw CompositionNotLagrangian("k_spaces: triple composite fails the lagrangian test");
  ch.l03 = ch.comp03.composed;
  double slack = 100.0 * tol.residual_tol;
  ch.associativity_ok =
      subspace_equal(ch.comp03.composed.space, ch.comp03_via13.composed.space, slack);
  ch.k012 = ch.comp02.k_space;
  ch.k123 = ch.comp13.k_space;
  ch.k013 = ch.comp03_via13.k_space;
  ch.k023 = ch.comp03.k_space;
  ch.inclusions_ok = contains_all(ch.k013, ch.k012.frame, slack) &&
                     contains_all(ch.k023, ch.k123.frame, slack);
  ch.c1 = intersect(ch.k013, orthogonal_complement(ch.k012, tol.rank_tol), tol.rank_tol);
  ch.c2 = intersect(ch.k023, orthogonal_complement(ch.k123, tol.rank_tol), tol.rank_tol);
  return ch;
}

DevelopmentMap development_map(const ChainSpaces& ch, const Tol& tol) {
  DevelopmentMap dev;
  Eigen::Index m = ch.c1.dim();
  if (ch.c2.dim() != m || ch.k013.dim() != ch.k012.dim() + m ||
      ch.k023.dim() != ch.k123.dim() + ch.c2.dim())
    throw NotAGraph("development_map: complement dimensions do not match");
  if (m == 0) return dev;
  Eigen::Index d1 = ch.l12.w_left.dim, d2 = ch.l12.w_right.dim;
  Mat block = Mat::Zero(d1 + d2, 2 * m);
  block.topLeftCorner(d1, m) = ch.c1.frame;
  block.bottomRightCorner(d2, m) = ch.c2.frame;
  Subspace r = intersect(ch.l12.space, Subspace{d1 + d2, block}, tol.rank_tol);
  if (r.dim() != m) throw NotAGraph("development_map: middle slice is not a graph");
  Mat a = ch.c1.frame.adjoint() * r.frame.topRows(d1);
  Mat b = ch.c2.frame.adjoint() * r.frame.bottomRows(d2);
  SvdResult sa = svd_thin(a);
  if (sa.sv(sa.sv.size() - 1) <= tol.rank_tol * sa.sv(0))
    throw NotAGraph("development_map: first-leg projection is singular");
  dev.rho0 = b * a.inverse();
  dev.det_rho0 = dev.rho0.determinant();
  dev.det_factor = std::norm(dev.det_rho0);
  return dev;
}

double swap_check(const ChainSpaces& ch, const DevelopmentMap& dev, const Tol& tol) {
  Eigen::Index m = ch.c2.dim();
  if (m == 0) return 0.0;
  FockModule f12 = make_fock(relation_ambient(ch.l12), ch.l12.space, tol);
  Eigen::Index d1 = ch.l12.w_left.dim, d2 = ch.l12.w_right.dim;
  double worst = 0.0;
  for (Eigen::Index t = 0; t < m; ++t) {
    Vec pulled = ch.c1.frame * (dev.rho0.adjoint().col(t));
    Vec lhs = f12.generator_action(embed(d1 + d2, 0, pulled)) * f12.vacuum();
    Vec rhs = f12.generator_action(embed(d1 + d2, d1, ch.c2.frame.col(t))) * f12.vacuum();
    worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

CoherenceEngine make_coherence_engine(const LagrangianRelation& l01,
                                      const LagrangianRelation& l12,
                                      const LagrangianRelation& l23, const Tol& tol) {
  CoherenceEngine eng;
  eng.ch = k_spaces(l01, l12, l23, tol);
  eng.tc0113 = tensor_over_clifford(l01, eng.ch.l13, tol);
  eng.tc1223 = tensor_over_clifford(l12, l23, tol);
  eng.tc0223 = tensor_over_clifford(eng.ch.l02, l23, tol);
  eng.tc0112 = tensor_over_clifford(l01, l12, tol);
  eng.f23 = eng.tc1223.f12;

  Eigen::Index da = eng.tc0112.f01.dim(), db = eng.tc0112.f12.dim(), dc = eng.f23.dim();
  Eigen::Index full3 = da * db * dc;
  Eigen::Index d1 = l12.w_left.dim, d2 = l12.w_right.dim;
  Mat frame = Mat::Identity(full3, full3);
  for (Eigen::Index j = 0; j < d1; ++j) {
    Vec v = Vec::Zero(d1);
    v(j) = 1.0;
    Mat op = kron(eng.tc0112.relation_op(v), Mat::Identity(dc, dc));
    frame = frame * kernel(op.adjoint() * frame, tol.rank_tol).frame;
  }
  for (Eigen::Index j = 0; j < d2; ++j) {
    Vec v = Vec::Zero(d2);
    v(j) = 1.0;
    Mat op = kron(Mat::Identity(da, da), eng.tc1223.relation_op(v));
    frame = frame * kernel(op.adjoint() * frame, tol.rank_tol).frame;
  }
  eng.reduced3 = Subspace{full3, frame};
  return eng;
}

Mat CoherenceEngine::path_right(const std::vector<Vec>& words013,
                                const std::vector<Vec>& words123) const {
  Mat a013 = alpha_from_generator(tc0113, ch.l03.space, generator_image(tc0113, words013));
  Mat a123 = alpha_from_generator(tc1223, ch.l13.space, generator_image(tc1223, words123));
  Mat rep123 = tc1223.reduced.frame * a123;  // (d12f*d23f) x 2^{k13}
  Eigen::Index da = tc0112.f01.dim(), d13f = tc0113.f12.dim(), dbc = rep123.rows();
  Mat out(reduced3.dim(), a013.cols());
  for (Eigen::Index s = 0; s < a013.cols(); ++s) {
    Vec y = tc0113.representative(a013.col(s));
    Vec z = Vec::Zero(reduced3.ambient);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index b = 0; b < d13f; ++b) {
        cxd c = y(a * d13f + b);
        if (c != 0.0) z.segment(a * dbc, dbc) += c * rep123.col(b);
      }
    out.col(s) = reduced3.frame.adjoint() * z;
  }
  return out;
}

Mat CoherenceEngine::path_left(const std::vector<Vec>& words023,
                               const std::vector<Vec>& words012, int line_parity) const {
  Mat a023 = alpha_from_generator(tc0223, ch.l03.space, generator_image(tc0223, words023));
  Mat a012 = alpha_from_generator(tc0112, ch.l02.space, generator_image(tc0112, words012));
  Mat rep012 = tc0112.reduced.frame * a012;  // (d01f*d12f) x 2^{k02}
  Eigen::Index d02f = tc0223.f01.dim(), dc = f23.dim(), dab = rep012.rows();
  Mat out(reduced3.dim(), a023.cols());
  for (Eigen::Index s = 0; s < a023.cols(); ++s) {
    Vec y = tc0223.representative(a023.col(s));
    Vec z = Vec::Zero(reduced3.ambient);
    for (Eigen::Index c02 = 0; c02 < d02f; ++c02)
      for (Eigen::Index d = 0; d < dc; ++d) {
        cxd coeff = y(c02 * dc + d);
        if (coeff == 0.0) continue;
        if (line_parity % 2 != 0 && f23.parity(d) != 0) coeff = -coeff;
        for (Eigen::Index ab = 0; ab < dab; ++ab) z(ab * dc + d) += coeff * rep012(ab, c02);
      }
    out.col(s) = reduced3.frame.adjoint() * z;
  }
  return out;
}

CoherenceReport coherence_check(const LagrangianRelation& l01, const LagrangianRelation& l12,
                                const LagrangianRelation& l23, const Tol& tol) {
  CoherenceEngine eng = make_coherence_engine(l01, l12, l23, tol);
  const ChainSpaces& ch = eng.ch;
  if (!ch.inclusions_ok || !ch.associativity_ok)
    throw NotAGraph("coherence_check: chain subspaces are not nested as required");
  DevelopmentMap dev = development_map(ch, tol);

  Eigen::Index l = ch.k012.dim(), m = ch.c1.dim(), n = ch.k123.dim();
  std::vector<Vec> words013, words123, words023, words012;
  for (Eigen::Index j = 0; j < l; ++j) words013.push_back(ch.k012.frame.col(j));
  for (Eigen::Index j = 0; j < m; ++j) words013.push_back(ch.c1.frame.col(j));
  for (Eigen::Index j = 0; j < n; ++j) words123.push_back(ch.k123.frame.col(j));
  for (Eigen::Index j = 0; j < n; ++j) words023.push_back(ch.k123.frame.col(j));
  for (Eigen::Index j = 0; j < m; ++j) words023.push_back(ch.c2.frame.col(j));
  for (Eigen::Index j = 0; j < l; ++j) words012.push_back(ch.k012.frame.col(j));

  Mat right = eng.path_right(words013, words123);
  Mat left_raw = eng.path_left(words023, words012, static_cast<int>(l));

  cxd det_m = dev.det_rho0 * (((m * n) % 2) ? -1.0 : 1.0);
  double reorder = ((l * (n + m)) % 2) ? -1.0 : 1.0;
  Mat left_norm = (det_m * reorder / dev.det_factor) * left_raw;
  Mat left_unnorm = (det_m * reorder) * left_raw;

  CoherenceReport rep;
  rep.det_factor = dev.det_factor;
  rep.path_difference = max_abs(left_norm - right);
  rep.negative_control_residual = max_abs(left_unnorm - right);
  rep.path_scale = max_abs(right);
  rep.swap_residual = swap_check(ch, dev, tol);
  rep.dim_k012 = l;
  rep.dim_k123 = n;
  rep.dim_c = m;

  double coherence_tol = 10.0 * tol.residual_tol;
  rep.pass = rep.path_difference <= coherence_tol && rep.swap_residual <= tol.residual_tol;
  if (std::abs(rep.det_factor - 1.0) > 1e-6)
    rep.pass = rep.pass && rep.negative_control_residual >=
                               0.5 * std::abs(rep.det_factor - 1.0) * rep.path_scale;
  return rep;
}

}  // namespace anomaly
