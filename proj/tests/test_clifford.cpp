#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anomaly/clifford.hpp"

#include <cmath>
#include <vector>

using namespace anomaly;

namespace {
const Tol tol;
}

TEST_CASE("fock basis is graded by subset size") {
  RSpace w = flip_space(2);
  FockModule f = make_fock(w, reference_lagrangian(w), tol);
  REQUIRE(f.dim() == 4);
  CHECK(f.parity(0) == 0);
  CHECK(f.parity(1) == 1);
  CHECK(f.parity(2) == 1);
  CHECK(f.parity(3) == 0);
  CHECK(std::abs(f.grading(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(f.grading(1, 1) + 1.0) < 1e-15);
  CHECK(f.vacuum()(0) == cxd(1, 0));
}

TEST_CASE("generator actions satisfy the quadratic relation") {
  Mat c(4, 4);
  c << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  RSpace w = make_rspace(c);
  FockModule f = make_fock(w, reference_lagrangian(w), tol);
  Mat id = Mat::Identity(f.dim(), f.dim());
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      Vec vi = Vec::Unit(4, i), vj = Vec::Unit(4, j);
      Mat ai = f.generator_action(vi), aj = f.generator_action(vj);
      CHECK(max_abs(Mat(ai * aj + aj * ai - bilinear_form(w, vi, vj) * id)) < 1e-13);
    }
}

TEST_CASE("generator words span the full matrix algebra") {
  for (Eigen::Index k = 1; k <= 3; ++k) {
    RSpace w = flip_space(k);
    FockModule f = make_fock(w, reference_lagrangian(w), tol);
    const Eigen::Index d = f.dim();
    Mat words(d * d, Eigen::Index(1) << (2 * k));
    for (Eigen::Index mask = 0; mask < words.cols(); ++mask) {
      Mat prod = Mat::Identity(d, d);
      for (Eigen::Index b = 0; b < 2 * k; ++b)
        if (mask & (Eigen::Index(1) << b)) prod = prod * f.generator_action(Vec::Unit(2 * k, b));
      words.col(mask) = Eigen::Map<Vec>(prod.data(), d * d);
    }
    SvdResult sv = svd_thin(words);
    CHECK(sv.sv(sv.sv.size() - 1) > 1e-8);  // faithful: all word classes independent
  }
}

TEST_CASE("creation and annihilation satisfy canonical relations") {
  CarOperators car = car_operators(2, tol);
  Mat id = Mat::Identity(4, 4);
  Vec e0 = Vec::Unit(2, 0), e1 = Vec::Unit(2, 1);
  Mat a0 = car.annihilate(e0), a1 = car.annihilate(e1);
  Mat c0 = car.create(e0), c1 = car.create(e1);
  CHECK(max_abs(Mat(a0 * a0)) < 1e-14);
  CHECK(max_abs(Mat(a0 * a1 + a1 * a0)) < 1e-14);
  CHECK(max_abs(Mat(c0 * a0 + a0 * c0 - id)) < 1e-14);
  CHECK(max_abs(Mat(c0 * a1 + a1 * c0)) < 1e-14);
  Mat n0 = c0 * a0;
  CHECK(max_abs(Mat(n0 * n0 - n0)) < 1e-14);
  CHECK(std::abs(n0.trace() - 2.0) < 1e-13);  // occupied half of the basis
}

TEST_CASE("creation is antilinear in its argument") {
  CarOperators car = car_operators(1, tol);
  Vec e0 = Vec::Unit(1, 0);
  Mat ci = car.create(Vec(cxd(0, 1) * e0));
  CHECK(max_abs(Mat(ci + cxd(0, 1) * car.create(e0))) < 1e-14);
}

TEST_CASE("right action graded-commutes with the left action") {
  RSpace w0 = make_rspace(Mat::Identity(2, 2));
  RSpace w1 = make_rspace(Mat::Identity(2, 2));
  LagrangianRelation rel = graph_lagrangian(w0, w1, Mat::Identity(2, 2), tol);
  FockModule f = make_fock(relation_ambient(rel), rel.space, tol);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      Mat lm = left_act(f, rel, Vec::Unit(2, i));
      Mat rm = right_act(f, rel, Vec::Unit(2, j));
      CHECK(max_abs(Mat(lm * rm - rm * lm)) < 1e-13);
    }
}

TEST_CASE("right actions realize the opposite quadratic relation") {
  RSpace w0 = make_rspace(Mat::Identity(2, 2));
  RSpace w1 = make_rspace(Mat::Identity(2, 2));
  LagrangianRelation rel = graph_lagrangian(w0, w1, Mat::Identity(2, 2), tol);
  FockModule f = make_fock(relation_ambient(rel), rel.space, tol);
  Mat id = Mat::Identity(f.dim(), f.dim());
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      Vec vi = Vec::Unit(2, i), vj = Vec::Unit(2, j);
      Mat ri = right_act(f, rel, vi), rj = right_act(f, rel, vj);
      CHECK(max_abs(Mat(ri * rj + rj * ri - bilinear_form(w1, vi, vj) * id)) < 1e-13);
    }
}

TEST_CASE("the joint kernel of the conjugate lagrangian is the vacuum line") {
  RSpace w = flip_space(2);
  Subspace l = reference_lagrangian(w);
  FockModule f = make_fock(w, l, tol);
  ModuleRep rep = fock_module_rep(f);
  Subspace pf = pfaffian_line(w, l, rep, tol.rank_tol);
  REQUIRE(pf.dim() == 1);
  CHECK(contains(pf, f.vacuum(), 1e-12));
}

TEST_CASE("the module map from a cyclic vector is invertible") {
  RSpace w = flip_space(2);
  Subspace l = reference_lagrangian(w);
  FockModule f = make_fock(w, l, tol);
  ModuleRep rep = fock_module_rep(f);
  Mat hom = hom_from_pfaffian(l, rep, f.vacuum());
  REQUIRE(hom.rows() == 4);
  REQUIRE(hom.cols() == 4);
  SvdResult sv = svd_thin(hom);
  CHECK(sv.sv(sv.sv.size() - 1) > 0.1);
}
