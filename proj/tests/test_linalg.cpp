#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anomaly/linalg.hpp"

using namespace anomaly;

TEST_CASE("orthonormalize drops dependent columns") {
  Mat cols(3, 3);
  cols.col(0) = Vec::Unit(3, 0);
  cols.col(1) = Vec::Unit(3, 0) * 2.0;
  cols.col(2) = Vec::Unit(3, 1);
  Subspace s = orthonormalize(cols, 1e-9);
  CHECK(s.dim() == 2);
  CHECK(max_abs(Mat(s.frame.adjoint() * s.frame - Mat::Identity(2, 2))) < 1e-14);
}

TEST_CASE("orthonormalize of no columns is the zero subspace") {
  Subspace s = orthonormalize(Mat(4, 0), 1e-9);
  CHECK(s.ambient == 4);
  CHECK(s.dim() == 0);
}

TEST_CASE("kernel spans the right null space") {
  Mat m(1, 2);
  m << 1.0, 1.0;
  Subspace k = kernel(m, 1e-9);
  REQUIRE(k.dim() == 1);
  CHECK((m * k.frame).norm() < 1e-14);
}

TEST_CASE("projector distance of lines at 45 degrees") {
  Subspace a{2, Mat(2, 1)}, b{2, Mat(2, 1)};
  a.frame << 1.0, 0.0;
  b.frame << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(projector_distance(a, b) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("intersect and sum on coordinate subspaces") {
  Mat f1(3, 2), f2(3, 2);
  f1.setZero();
  f1(0, 0) = 1.0;
  f1(1, 1) = 1.0;
  f2.setZero();
  f2(1, 0) = 1.0;
  f2(2, 1) = 1.0;
  Subspace s1{3, f1}, s2{3, f2};
  CHECK(intersect(s1, s2, 1e-9).dim() == 1);
  CHECK(subspace_sum(s1, s2, 1e-9).dim() == 3);
  CHECK(contains(intersect(s1, s2, 1e-9), Vec::Unit(3, 1), 1e-9));
}

TEST_CASE("orthogonal complement has complementary dimension") {
  Subspace s{3, Mat(3, 1)};
  s.frame << 0.0, 0.0, 1.0;
  Subspace c = orthogonal_complement(s, 1e-9);
  CHECK(c.dim() == 2);
  CHECK(max_abs(Mat(c.frame.adjoint() * s.frame)) < 1e-14);
}

TEST_CASE("svd of empty matrices is empty") {
  SvdResult r = svd_thin(Mat(0, 3));
  CHECK(r.sv.size() == 0);
  CHECK(r.v.rows() == 3);
  CHECK(max_abs(Mat(2, 0)) == 0.0);
}

TEST_CASE("subspace equality ignores the choice of frame") {
  Mat f(2, 2);
  f << 1.0, 1.0, 1.0, -1.0;
  f /= std::sqrt(2.0);
  Subspace rotated{2, f};
  CHECK(subspace_equal(rotated, full_subspace(2), 1e-12));
  CHECK(!subspace_equal(zero_subspace(2), full_subspace(2), 1e-12));
}
