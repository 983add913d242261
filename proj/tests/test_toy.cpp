#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anomaly/sampling.hpp"

#include <cmath>

using namespace anomaly;

namespace {
const Tol tol;

ToyBordism single_strand(const Mat& u, Eigen::Index sites) {
  ToyBordism x;
  x.in.points = {PointObject{u.rows(), false}};
  x.out.points = {PointObject{u.rows(), false}};
  x.edges = {ToyEdge{EdgeEnd{false, 0}, EdgeEnd{true, 0}, u, sites}};
  return x;
}
}  // namespace

TEST_CASE("point charts pair a rank with its reflection") {
  Mat c = point_conjugation(2);
  RSpace w = make_rspace(c);
  CHECK(w.dim == 4);
  Subspace l = reference_lagrangian(w);
  CHECK(l.dim() == 2);
}

TEST_CASE("transfer of a unitary preserves the chart structure") {
  Rng rng = case_rng(11, 0);
  Mat u = random_unitary(rng, 2);
  Mat t = chart_transfer(u);
  Mat c = point_conjugation(2);
  CHECK(max_abs(Mat(t.adjoint() * t - Mat::Identity(4, 4))) < 1e-12);
  CHECK(max_abs(Mat(t * c - c * t.conjugate())) < 1e-12);  // commutes with conjugation
}

TEST_CASE("a single identity strand bounds the diagonal") {
  ToyBordism x = single_strand(Mat::Identity(1, 1), 4);
  ToyBoundary b = boundary_lagrangian(x, tol);
  CHECK(b.l.w_left.dim == 2);
  CHECK(b.l.w_right.dim == 2);
  Mat diag(4, 2);
  diag.setZero();
  diag.topRows(2) = Mat::Identity(2, 2);
  diag.bottomRows(2) = Mat::Identity(2, 2);
  CHECK(projector_distance(b.l.space, orthonormalize(diag, tol.rank_tol)) < 1e-12);
}

TEST_CASE("validation rejects broken strands") {
  ToyBordism no_unitary = single_strand(2.0 * Mat::Identity(1, 1), 1);
  CHECK_THROWS_AS(validate_bordism(no_unitary), InvalidTransfer);

  ToyBordism wrong_direction = single_strand(Mat::Identity(1, 1), 1);
  std::swap(wrong_direction.edges[0].from, wrong_direction.edges[0].to);
  CHECK_THROWS_AS(validate_bordism(wrong_direction), InvalidTransfer);

  ToyBordism dangling = single_strand(Mat::Identity(1, 1), 1);
  dangling.in.points.push_back(PointObject{1, false});
  CHECK_THROWS_AS(validate_bordism(dangling), InvalidTransfer);
}

TEST_CASE("closed loop with trivial holonomy keeps its full harmonic space") {
  ToyBordism x;
  x.circles = {ToyCircle{Mat::Identity(1, 1), 5}};
  ToyBoundary b = boundary_lagrangian(x, tol);
  REQUIRE(b.circle_kernels.size() == 1);
  CHECK(b.circle_kernels[0].cols() == 2);
  // lattice normalization: each column has norm 1/sqrt(sites)
  CHECK(b.circle_kernels[0].col(0).norm() == doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK(b.l.space.dim() == 0);
}

TEST_CASE("a generic phase kills the harmonic space") {
  ToyBordism x;
  x.circles = {ToyCircle{cxd(std::cos(0.7), std::sin(0.7)) * Mat::Identity(1, 1), 3}};
  ToyBoundary b = boundary_lagrangian(x, tol);
  REQUIRE(b.circle_kernels.size() == 1);
  CHECK(b.circle_kernels[0].cols() == 0);
}

TEST_CASE("cutting a circle twice leaves a two-dimensional intersection") {
  Rng rng = case_rng(3, 1);
  // inverse arcs: total holonomy is trivial, so flat sections survive
  Mat u0 = random_unitary(rng, 1), u1 = u0.adjoint();
  CutCircle cc = cut_circle({u0, u1}, {2, 3});
  TauResult res = tau(cc.whole, cc.x0, cc.x1, tol);
  CHECK(res.glue.comp.k_space.dim() == 2);
  CHECK(res.h_dim == 2);
  GlueReport rep = verify_glue(res.glue, tol);
  CHECK(rep.pass);
}

TEST_CASE("restrictions of the harmonic basis are lattice-orthogonal") {
  CutCircle cc = cut_circle({Mat::Identity(1, 1), Mat::Identity(1, 1)}, {3, 5});
  TauResult res = tau(cc.whole, cc.x0, cc.x1, tol);
  const Mat& r = res.glue.k_basis;
  CHECK(max_abs(Mat(r.adjoint() * r - 0.25 * Mat::Identity(2, 2))) < 1e-13);
  CHECK(res.det_factor == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("the scale factor only sees the cut count and total size") {
  CutCircle a = cut_circle({Mat::Identity(1, 1), Mat::Identity(1, 1)}, {3, 5});
  CutCircle b = cut_circle({Mat::Identity(1, 1), Mat::Identity(1, 1)}, {5, 3});
  double fa = tau(a.whole, a.x0, a.x1, tol).det_factor;
  double fb = tau(b.whole, b.x0, b.x1, tol).det_factor;
  CHECK(fa == doctest::Approx(fb).epsilon(1e-12));
  std::vector<Mat> four(4, Mat::Identity(1, 1));
  CutCircle c = cut_circle(four, {2, 2, 2, 2});
  CHECK(tau(c.whole, c.x0, c.x1, tol).det_factor == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("mismatched pieces are rejected") {
  Rng rng = case_rng(9, 2);
  Mat u0 = random_unitary(rng, 1), u1 = random_unitary(rng, 1), u2 = random_unitary(rng, 1);
  CutCircle good = cut_circle({u0, u1}, {2, 2});
  CutCircle other = cut_circle({u0, u2}, {2, 2});
  CHECK_THROWS_AS(tau(other.whole, good.x0, good.x1, tol), CutMismatch);

  CutCircle bigger = cut_circle({u0, u1}, {2, 3});
  CHECK_THROWS_AS(tau(bigger.whole, good.x0, good.x1, tol), CutMismatch);
}

TEST_CASE("gluing bordisms composes their boundary relations") {
  Rng rng = case_rng(21, 0);
  ToyTriple tt = toy_triple(rng, ToyTripleSpec{1, 1, 0, 0, 1, 0, 0, 3});
  GluedBordism glued = glue_bordisms(tt.x01, tt.x12);
  CompositionResult comp =
      compose(boundary_lagrangian(tt.x01, tol).l, boundary_lagrangian(tt.x12, tol).l, tol);
  ToyBoundary whole = boundary_lagrangian(glued.glued, tol);
  CHECK(projector_distance(whole.l.space, comp.composed.space) < 1e-12);
  CHECK(glued.formed.size() == 1);  // the loop through the interface closes up
}

TEST_CASE("transversality of the cut data against the intersection space") {
  CutCircle cc = cut_circle({Mat::Identity(2, 2), Mat::Identity(2, 2)}, {2, 2});
  TransversalityReport rep = cobordism_transversality_check(cc.x0, cc.x1, tol);
  CHECK(rep.dim_k == 4);
  CHECK(rep.intersection_residual < 1e-12);
  CHECK(rep.restriction_residual < 1e-12);
  CHECK(rep.sum_residual < 1e-12);
  CHECK(rep.pass);
}

TEST_CASE("triple chains agree along both regluing orders") {
  Rng rng = case_rng(33, 5);
  // one flat loop across each interface: both carry two harmonic sections
  ToyBordism x01, x12, x23;
  Mat u1 = random_unitary(rng, 1), u2 = random_unitary(rng, 1);
  x01.in.points = {PointObject{1, false}, PointObject{1, true}};
  x01.edges.push_back(ToyEdge{{false, 0}, {false, 1}, u1, 2});
  x12.out = x01.in;
  x12.in.points = {PointObject{1, false}, PointObject{1, true}};
  x12.edges.push_back(ToyEdge{{true, 1}, {true, 0}, u1.adjoint(), 3});
  x12.edges.push_back(ToyEdge{{false, 0}, {false, 1}, u2, 2});
  x23.out = x12.in;
  x23.edges.push_back(ToyEdge{{true, 1}, {true, 0}, u2.adjoint(), 2});
  ToyCoherenceReport rep = toy_coherence_check(x01, x12, x23, tol);
  CHECK(rep.n02 == 2);
  CHECK(rep.nr == 0);
  CHECK(rep.n13 == 2);
  CHECK(rep.det_ratio == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rep.path_difference < 1e-12);
  CHECK(rep.path_scale > 1e-6);
  CHECK(rep.pass);
}

TEST_CASE("a flat circle through both cuts reglues consistently") {
  Rng rng = case_rng(34, 7);
  ToyBordism x01, x12, x23;
  Mat ua = random_unitary(rng, 1), uc = random_unitary(rng, 1), ud = random_unitary(rng, 1);
  Mat ub = (ud * uc * ua).adjoint();
  x01.in.points = {PointObject{1, false}, PointObject{1, true}};
  x12.in.points = {PointObject{1, false}, PointObject{1, true}};
  x12.out = x01.in;
  x23.out = x12.in;
  x01.edges.push_back(ToyEdge{{false, 0}, {false, 1}, ua, 2});
  x12.edges.push_back(ToyEdge{{false, 0}, {true, 0}, ub, 3});
  x12.edges.push_back(ToyEdge{{true, 1}, {false, 1}, uc, 1});
  x23.edges.push_back(ToyEdge{{true, 1}, {true, 0}, ud, 2});
  ToyCoherenceReport rep = toy_coherence_check(x01, x12, x23, tol);
  CHECK(rep.n02 == 0);
  CHECK(rep.nr == 2);
  CHECK(rep.n13 == 0);
  CHECK(rep.path_difference < 1e-12);
  CHECK(rep.path_scale > 1e-6);
  CHECK(rep.pass);
}

TEST_CASE("fock data of the boundary twist matches the relation") {
  ToyBordism x = single_strand(Mat::Identity(1, 1), 2);
  TwistValue tv = twist(x, tol);
  CHECK(tv.fock.dim() == 4);  // exterior algebra of a two-column frame
  CHECK(projector_distance(tv.fock.l, tv.boundary.l.space) < 1e-12);
}
