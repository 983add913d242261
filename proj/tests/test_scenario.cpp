#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anomaly/scenario.hpp"

using namespace anomaly;

namespace {
const Tol tol;

Json identity2() { return Json::parse(R"([[[1,0],[0,0]],[[0,0],[1,0]]])"); }
}  // namespace

TEST_CASE("matrices parse with paired real and imaginary parts") {
  Mat m = parse_matrix(Json::parse(R"([[[1,2],[0,-1]]])"));
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == cxd(1, 2));
  CHECK(m(0, 1) == cxd(0, -1));
  CHECK(parse_matrix(Json::array()).rows() == 0);
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"([[[1,2]],[[1,2],[3,4]]])")), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"([[[1,2,3]]])")), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"(3)")), std::invalid_argument);
}

TEST_CASE("a rotation graph pair runs and passes") {
  Json s;
  s["kind"] = "graph_pair";
  s["w0"] = identity2();
  s["w1"] = identity2();
  s["w2"] = identity2();
  s["q01"] = Json::parse(R"([[[0.6,0],[0.8,0]],[[-0.8,0],[0.6,0]]])");
  s["q12"] = Json::parse(R"([[[0.96,0],[0.28,0]],[[-0.28,0],[0.96,0]]])");
  ScenarioOutcome out = run_scenario(s, tol);
  CHECK(out.pass);
  CHECK(out.report.at("composite_graph_distance").get<double>() < 1e-12);
  CHECK(out.report.at("pfaffian_line_dim").get<Eigen::Index>() == 1);
}

TEST_CASE("chain scenarios report the development factor") {
  Json s;
  s["kind"] = "chain_triple";
  s["lambdas"] = Json::parse(R"([[2,0]])");
  ScenarioOutcome out = run_scenario(s, tol);
  CHECK(out.pass);
  CHECK(out.report.at("det_factor").get<double>() == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("cut scenarios check the expected factor when given") {
  Json s;
  s["kind"] = "toy_tau";
  s["rank"] = 1;
  s["arc_units"] = Json::parse(R"([[[[1,0]]],[[[1,0]]]])");
  s["arc_sites"] = Json::parse(R"([2,2])");
  ScenarioOutcome out = run_scenario(s, tol);
  CHECK(out.pass);
  CHECK(out.report.at("det_factor").get<double>() == doctest::Approx(0.25).epsilon(1e-10));

  s["expected_det_factor"] = 0.125;  // wrong on purpose
  CHECK(!run_scenario(s, tol).pass);
}

TEST_CASE("unknown kinds and missing files fail loudly") {
  Json s;
  s["kind"] = "nonsense";
  CHECK_THROWS_AS(run_scenario(s, tol), std::invalid_argument);
  CHECK_THROWS(run_scenario(Json::object(), tol));
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), std::runtime_error);
}

TEST_CASE("relation frames that are not lagrangian are rejected") {
  Json s;
  s["kind"] = "glue_pair";
  s["w0"] = Json::array();
  s["w1"] = identity2();
  s["w2"] = Json::array();
  s["l01"] = Json::parse(R"([[[1,0]],[[0,0]]])");  // span{e0}: not isotropic
  s["l12"] = Json::parse(R"([[[0.70710678118654752,0]],[[0,0.70710678118654752]]])");
  CHECK_THROWS_AS(run_scenario(s, tol), std::invalid_argument);
}
