#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anomaly/lagrangian.hpp"

#include <algorithm>
#include <cmath>

using namespace anomaly;

namespace {
const Tol tol;

RSpace trivial(Eigen::Index n) { return make_rspace(Mat::Identity(n, n)); }

LagrangianRelation diagonal_line_relation(Eigen::Index left_dim, Eigen::Index right_dim) {
  // span{(1, i)/sqrt(2)} inside a two-dimensional factor, the other factor empty
  Mat frame(2, 1);
  frame << cxd(1, 0), cxd(0, 1);
  frame /= std::sqrt(2.0);
  return LagrangianRelation{trivial(left_dim), trivial(right_dim), Subspace{2, frame}};
}
}  // namespace

TEST_CASE("graph of the identity is lagrangian") {
  LagrangianRelation l = graph_lagrangian(trivial(2), trivial(2), Mat::Identity(2, 2), tol);
  IsLagrangianReport rep = is_lagrangian(relation_ambient(l), l.space, tol);
  CHECK(rep.dim_ok);
  CHECK(rep.residual < 1e-12);
  CHECK(rep.pass);
}

TEST_CASE("a diagonal stretch is not a graph") {
  Mat q(2, 2);
  q << 2.0, 0.0, 0.0, 0.5;
  CHECK_THROWS_AS(graph_lagrangian(trivial(2), trivial(2), q, tol), NotAGraphLagrangian);
}

TEST_CASE("graphs compose to the graph of the product") {
  Mat q01(2, 2), q12(2, 2);
  q01 << cxd(1.25, 0), cxd(0, 0.75), cxd(0, -0.75), cxd(1.25, 0);
  q12 << 0.96, 0.28, -0.28, 0.96;
  LagrangianRelation l01 = graph_lagrangian(trivial(2), trivial(2), q01, tol);
  LagrangianRelation l12 = graph_lagrangian(trivial(2), trivial(2), q12, tol);
  CompositionResult comp = compose(l01, l12, tol);
  LagrangianRelation prod = graph_lagrangian(trivial(2), trivial(2), Mat(q12 * q01), tol);
  CHECK(comp.composed_report.pass);
  CHECK(comp.dim_identity_ok);
  CHECK(comp.k_space.dim() == 0);
  CHECK(projector_distance(comp.composed.space, prod.space) < 1e-12);
}

TEST_CASE("composing over a shared line leaves a one-dimensional intersection") {
  LagrangianRelation l01 = diagonal_line_relation(0, 2);
  LagrangianRelation l12 = diagonal_line_relation(2, 0);
  CompositionResult comp = compose(l01, l12, tol);
  CHECK(comp.composed.space.dim() == 0);
  CHECK(comp.k_space.dim() == 1);
  CHECK(comp.l_sigma_dim == 1);
  CHECK(comp.dim_identity_ok);
  Vec line(2);
  line << cxd(1, 0), cxd(0, 1);
  CHECK(contains(comp.k_space, line, 1e-12));
}

TEST_CASE("the four-part splitting is orthogonal") {
  LagrangianRelation l01 = diagonal_line_relation(0, 2);
  LagrangianRelation l12 = diagonal_line_relation(2, 0);
  SplittingReport rep = splitting_check(l01, l12, tol);
  CHECK(rep.dims_sum_ok);
  CHECK(rep.orthogonality_residual < 1e-12);
  CHECK(rep.pass);
}

TEST_CASE("weight family at exponent zero is the diagonal graph") {
  LagrangianRelation l = qalpha_lagrangian(0.0, 2, tol);
  LagrangianRelation diag = graph_lagrangian(l.w_left, l.w_right, Mat::Identity(5, 5), tol);
  CHECK(projector_distance(l.space, diag.space) < 1e-12);
}

TEST_CASE("weight family frame carries the exponential weights") {
  LagrangianRelation l = qalpha_lagrangian(1.0, 2, tol);
  IsLagrangianReport rep = is_lagrangian(relation_ambient(l), l.space, tol);
  CHECK(rep.pass);
  for (Eigen::Index i = 0; i < 5; ++i) {
    double lam = std::exp(static_cast<double>(i - 2));
    CHECK(std::abs(l.space.frame(5 + i, i) / l.space.frame(i, i) - lam) < 1e-12);
  }
}

TEST_CASE("opposite-exponent weights compose to the identity graph") {
  CompositionResult comp =
      compose(qalpha_lagrangian(1.0, 2, tol), qalpha_lagrangian(-1.0, 2, tol), tol);
  LagrangianRelation diag =
      graph_lagrangian(comp.composed.w_left, comp.composed.w_right, Mat::Identity(5, 5), tol);
  CHECK(comp.composed_report.pass);
  CHECK(projector_distance(comp.composed.space, diag.space) < 1e-10);
  // smallest singular value of the middle-difference map, known in closed form
  double expected = std::sqrt(2.0) * std::exp(-2.0) / std::sqrt(1.0 + std::exp(-4.0));
  CHECK(comp.closedness_margin == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("closeness profile is sorted and bounded by one") {
  LagrangianRelation a = qalpha_lagrangian(1.0, 4, tol);
  LagrangianRelation b = qalpha_lagrangian(0.0, 4, tol);
  ClosenessReport rep = closeness(a.space, b.space);
  REQUIRE(!rep.singular_values.empty());
  CHECK(rep.operator_norm == doctest::Approx(rep.singular_values.front()));
  CHECK(rep.operator_norm <= 1.0 + 1e-12);
  CHECK(std::is_sorted(rep.singular_values.rbegin(), rep.singular_values.rend()));
}
