#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anomaly/sampling.hpp"

#include <cmath>

using namespace anomaly;

namespace {
const Tol tol;

RSpace trivial(Eigen::Index n) { return make_rspace(Mat::Identity(n, n)); }

LagrangianRelation diagonal_line_relation(Eigen::Index left_dim, Eigen::Index right_dim) {
  Mat frame(2, 1);
  frame << cxd(1, 0), cxd(0, 1);
  frame /= std::sqrt(2.0);
  return LagrangianRelation{trivial(left_dim), trivial(right_dim), Subspace{2, frame}};
}
}  // namespace

TEST_CASE("tensor over the middle algebra has the expected quotient") {
  // both outer spaces empty, middle = C^2, both relations the same line:
  // the 2x2-dimensional tensor collapses to a single line
  LagrangianRelation l01 = diagonal_line_relation(0, 2);
  LagrangianRelation l12 = diagonal_line_relation(2, 0);
  TensorOverClifford tc = tensor_over_clifford(l01, l12, tol);
  CHECK(tc.full_dim() == 4);
  CHECK(tc.reduced_dim() == 1);
}

TEST_CASE("vacuum dies and the intersection word survives") {
  LagrangianRelation l01 = diagonal_line_relation(0, 2);
  LagrangianRelation l12 = diagonal_line_relation(2, 0);
  GlueResult g = glue_iso(l01, l12, tol);
  REQUIRE(g.comp.k_space.dim() == 1);
  Vec vacuum = Vec::Zero(g.tensor.full_dim());
  vacuum(0) = 1.0;
  CHECK(g.tensor.to_reduced(vacuum).norm() < 1e-13);
  CHECK(g.generator.norm() > 0.5);
  GlueReport rep = verify_glue(g, tol);
  CHECK(rep.reduced_dim == 1);
  CHECK(rep.expected_reduced_dim == 1);
  CHECK(rep.pf_dim == 1);
  CHECK(rep.pass);
}

TEST_CASE("gluing a graph pair is bijective and intertwines the outer actions") {
  Mat q01(2, 2), q12(2, 2);
  q01 << cxd(1.25, 0), cxd(0, 0.75), cxd(0, -0.75), cxd(1.25, 0);
  q12 << 0.96, 0.28, -0.28, 0.96;
  GlueResult g = glue_iso(graph_lagrangian(trivial(2), trivial(2), q01, tol),
                          graph_lagrangian(trivial(2), trivial(2), q12, tol), tol);
  GlueReport rep = verify_glue(g, tol);
  CHECK(rep.reduced_dim == 4);
  CHECK(rep.sigma_min > 0.1);
  CHECK(rep.intertwine_residual < 1e-12);
  CHECK(rep.generator_annihilation_residual < 1e-12);
  CHECK(rep.subtop_residual < 1e-12);
  CHECK(rep.pass);
}

TEST_CASE("a rotation chain develops with the squared-modulus factor") {
  RelationTriple t = rotation_chain({cxd(2.0, 0.0)}, tol);
  ChainSpaces ch = k_spaces(t.l01, t.l12, t.l23, tol);
  CHECK(ch.inclusions_ok);
  CHECK(ch.associativity_ok);
  CHECK(ch.k012.dim() == 0);
  CHECK(ch.k123.dim() == 0);
  CHECK(ch.c1.dim() == 1);
  DevelopmentMap dev = development_map(ch, tol);
  CHECK(dev.det_factor == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(swap_check(ch, dev, tol) < 1e-12);
}

TEST_CASE("coherence of the two regluing paths after normalization") {
  RelationTriple t = rotation_chain({cxd(1.3, 0.4)}, tol);
  CoherenceReport rep = coherence_check(t.l01, t.l12, t.l23, tol);
  CHECK(rep.det_factor == doctest::Approx(1.85).epsilon(1e-10));
  CHECK(rep.path_difference < 1e-12);
  CHECK(rep.negative_control_residual > 1e-4 * rep.path_scale);
  CHECK(rep.pass);
}

TEST_CASE("coherence with forced middle intersections on both interfaces") {
  Rng rng = case_rng(42, 0);
  RelationTriple t = forced_k_triple(rng, 0, 0, 2, 0, 2, 0);
  ChainSpaces ch = k_spaces(t.l01, t.l12, t.l23, tol);
  CHECK(ch.k012.dim() == 1);
  CHECK(ch.k123.dim() == 1);
  CHECK(ch.c1.dim() == 0);
  CoherenceReport rep = coherence_check(t.l01, t.l12, t.l23, tol);
  CHECK(rep.pass);
}

TEST_CASE("block sums glue blockwise") {
  Rng rng = case_rng(7, 3);
  RelationPair a = random_relation_pair(rng, 2, 2, 2);
  RelationPair b = forced_k_pair(rng, 0, 0, 2, 2);
  CompositionResult ca = compose(a.l01, a.l12, tol);
  CompositionResult cb = compose(b.l01, b.l12, tol);
  CompositionResult cs = compose(direct_sum_relation(a.l01, b.l01),
                                 direct_sum_relation(a.l12, b.l12), tol);
  CHECK(cs.k_space.dim() == ca.k_space.dim() + cb.k_space.dim());
  CHECK(cs.composed.space.dim() == ca.composed.space.dim() + cb.composed.space.dim());
  CHECK(cs.composed_report.pass);
}

TEST_CASE("a pure intersection line glues to a one-by-one isomorphism") {
  LagrangianRelation l01 = diagonal_line_relation(0, 2);
  LagrangianRelation l12 = diagonal_line_relation(2, 0);
  GlueResult g = glue_iso(l01, l12, tol);
  CHECK(g.alpha.rows() == 1);
  CHECK(g.alpha.cols() == 1);
  CHECK(std::abs(g.alpha(0, 0)) > 0.1);
}

TEST_CASE("the dressed generator norm splits off the transversal survival") {
  for (int i = 0; i < 6; ++i) {
    Rng rng = case_rng(21, static_cast<std::uint64_t>(i));
    RelationPair forced = forced_k_pair(rng, 0, 0, 2 * (1 + i % 3), 0);
    GlueResult gf = glue_iso(forced.l01, forced.l12, tol);
    double rigid = std::pow(0.5, 0.5 * static_cast<double>(gf.comp.k_space.dim()));
    CHECK(gf.generator.norm() == doctest::Approx(rigid).epsilon(1e-12));

    RelationPair plain = random_relation_pair(rng, 2, 2, 2);
    GlueResult gp = glue_iso(plain.l01, plain.l12, tol);
    if (gp.comp.k_space.dim() != 0) continue;
    Vec vacuum = Vec::Zero(gp.tensor.full_dim());
    vacuum(0) = 1.0;
    double survival = gp.tensor.to_reduced(vacuum).norm();
    GlueResult gs = glue_iso(direct_sum_relation(plain.l01, forced.l01),
                             direct_sum_relation(plain.l12, forced.l12), tol);
    CHECK(gs.generator.norm() == doctest::Approx(rigid * survival).epsilon(1e-12));
  }
}
