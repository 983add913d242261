#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anomaly/rspace.hpp"

using namespace anomaly;

TEST_CASE("structure matrix must be unitary and symmetric") {
  CHECK_THROWS_AS(make_rspace(Mat::Identity(2, 3)), std::invalid_argument);
  Mat skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(make_rspace(skew), std::invalid_argument);
  Mat scaled = 2.0 * Mat::Identity(2, 2);
  CHECK_THROWS_AS(make_rspace(scaled), std::invalid_argument);
  CHECK(rspace_invariant_residual(make_rspace(Mat::Identity(2, 2))) < 1e-14);
}

TEST_CASE("bilinear form is symmetric and sign-flips on the opposite") {
  RSpace w = make_rspace(Mat::Identity(3, 3));
  Vec v(3), u(3);
  v << cxd(1, 2), cxd(0, -1), cxd(0.5, 0);
  u << cxd(-1, 0), cxd(2, 1), cxd(0, 3);
  CHECK(std::abs(bilinear_form(w, v, u) - bilinear_form(w, u, v)) < 1e-14);
  CHECK(std::abs(bilinear_form(opposite(w), v, u) + bilinear_form(w, v, u)) < 1e-14);
}

TEST_CASE("swap structure pairs the summand with its dual") {
  RSpace f = flip_space(1);
  Vec e0 = Vec::Unit(2, 0), e1 = Vec::Unit(2, 1);
  CHECK(std::abs(bilinear_form(f, e0, e1) - 1.0) < 1e-14);
  CHECK(std::abs(bilinear_form(f, e0, e0)) < 1e-14);
  CHECK(std::abs(bilinear_form(f, e1, e1)) < 1e-14);
}

TEST_CASE("fixed points form an orthonormal real basis") {
  Mat c(2, 2);
  c << 0.0, 1.0, 1.0, 0.0;
  RSpace w = make_rspace(c);
  Mat e = real_points(w);
  CHECK(max_abs(Mat(e.adjoint() * e - Mat::Identity(2, 2))) < 1e-12);
  CHECK(max_abs(Mat(w.conjugate_cols(e) - e)) < 1e-12);
}

TEST_CASE("reference lagrangian is lagrangian and needs even dimension") {
  RSpace w = make_rspace(Mat::Identity(4, 4));
  Subspace l = reference_lagrangian(w);
  CHECK(l.dim() == 2);
  CHECK(max_abs(Mat(w.conjugate_cols(l.frame).adjoint() * l.frame)) < 1e-12);
  CHECK_THROWS_AS(reference_lagrangian(make_rspace(Mat::Identity(3, 3))), NoLagrangianExists);
}

TEST_CASE("conjugate map with trivial structures is entrywise conjugation") {
  RSpace w2 = make_rspace(Mat::Identity(2, 2));
  RSpace w3 = make_rspace(Mat::Identity(3, 3));
  Mat f(3, 2);
  f << cxd(1, 1), cxd(0, 2), cxd(-1, 0), cxd(3, -1), cxd(0, 0), cxd(2, 2);
  CHECK(max_abs(Mat(conjugate_map(w2, w3, f) - f.conjugate())) < 1e-14);
}

TEST_CASE("direct sum stacks the structures blockwise") {
  RSpace a = make_rspace(Mat::Identity(1, 1));
  Mat c(2, 2);
  c << 0.0, 1.0, 1.0, 0.0;
  RSpace b = make_rspace(c);
  RSpace s = direct_sum(a, b);
  CHECK(s.dim == 3);
  CHECK(std::abs(s.conj_matrix(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(s.conj_matrix(1, 2) - 1.0) < 1e-15);
  CHECK(std::abs(s.conj_matrix(1, 1)) < 1e-15);
}
