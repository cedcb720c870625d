#include <string>
#include <vector>

#include "doctest.h"
#include "hfs/approx.hpp"
#include "hfs/fixtures.hpp"

using namespace hfs;
using fixtures::el;
using fixtures::set_over;

namespace {

// Same space as in the neighborhood tests: kind p, beta {0.6,0.3},
//   e1: x -> {0.7,0.2}  y -> {0.5}
//   e2: x -> {0.6}      y -> {0.8,0.4}
// with SN~_x = (x:{0.6,0.2}, y:{0.5,0.4}), SN~_y = image of e2,
// SN-bar_x = {x}, SN-bar_y = {x,y}.
CoveringSpace p_space() {
  UniversePtr u = make_universe({"x", "y"});
  std::vector<HesitantFuzzySet> imgs{
      set_over(u, {{"0.7", "0.2"}, {"0.5"}}),
      set_over(u, {{"0.6"}, {"0.8", "0.4"}}),
  };
  return CoveringSpace(HesitantFuzzySoftSet(u, ParameterSet({"e1", "e2"}), imgs),
                       el({"0.6", "0.3"}), InclusionKind::P);
}

CoveringSpace m_space_with_null() {
  UniversePtr u = make_universe({"x", "y"});
  std::vector<HesitantFuzzySet> imgs{
      set_over(u, {{"0.6", "0.1"}, {"0.8"}}),
      set_over(u, {{"0.5", "0.2"}, {"0.7", "0.3"}}),
  };
  return CoveringSpace(HesitantFuzzySoftSet(u, ParameterSet({"e1", "e2"}), imgs),
                       el({"0.4"}), InclusionKind::M);
}

}  // namespace

TEST_CASE("hesitant approximations, worked by hand") {
  CoveringSpace s = p_space();
  UniversePtr u = s.universe();
  HesitantFuzzySet x = set_over(u, {{"0.5"}, {"0.9", "0.7"}});

  CHECK(hesitant_lower(s, x) == set_over(u, {{"0.8", "0.7", "0.5"}, {"0.5"}}));
  CHECK(hesitant_upper(s, x) == set_over(u, {{"0.5", "0.5", "0.4"}, {"0.8", "0.7", "0.5"}}));
}

TEST_CASE("hesitant approximations refuse targets over a different universe") {
  CoveringSpace s = p_space();
  UniversePtr other = make_universe({"x", "z"});
  HesitantFuzzySet x = set_over(other, {{"0.5"}, {"0.5"}});
  CHECK_THROWS_AS(hesitant_lower(s, x), UniverseMismatch);
  CHECK_THROWS_AS(hesitant_upper(s, x), UniverseMismatch);
}

TEST_CASE("crisp approximations, worked by hand") {
  CoveringSpace s = p_space();
  CHECK(crisp_lower(s, ObjectSet{0}) == ObjectSet{0});
  CHECK(crisp_upper(s, ObjectSet{0}) == ObjectSet{0, 1});
  CHECK(crisp_lower(s, ObjectSet{1}) == ObjectSet{});
  CHECK(crisp_upper(s, ObjectSet{1}) == ObjectSet{1});
  CHECK(crisp_lower(s, ObjectSet{0, 1}) == ObjectSet{0, 1});
  CHECK(crisp_upper(s, ObjectSet{}) == ObjectSet{});
}

TEST_CASE("a Null neighborhood anywhere makes approximations undefined") {
  CoveringSpace s = m_space_with_null();
  HesitantFuzzySet x = set_over(s.universe(), {{"0.5"}, {"0.5"}});
  CHECK_THROWS_AS(hesitant_lower(s, x), UndefinedNeighborhood);
  CHECK_THROWS_AS(hesitant_upper(s, x), UndefinedNeighborhood);
  CHECK_THROWS_AS(crisp_lower(s, ObjectSet{0}), UndefinedNeighborhood);
  CHECK_THROWS_AS(crisp_upper(s, ObjectSet{0}), UndefinedNeighborhood);
  try {
    hesitant_lower(s, x);
    FAIL("expected UndefinedNeighborhood");
  } catch (const UndefinedNeighborhood& e) {
    CHECK(e.object == "x");
  }
}

TEST_CASE("the report bundles whatever targets were supplied") {
  CoveringSpace s = p_space();
  HesitantFuzzySet x = set_over(s.universe(), {{"0.5"}, {"0.9", "0.7"}});

  ApproxReport both = approx_report(s, x, ObjectSet{0});
  CHECK(both.kind == InclusionKind::P);
  CHECK(both.beta == el({"0.6", "0.3"}));
  CHECK(both.params == std::vector<std::string>{"e1", "e2"});
  REQUIRE(both.hesitant.has_value());
  REQUIRE(both.crisp.has_value());
  CHECK(both.hesitant->lower == hesitant_lower(s, x));
  CHECK(both.hesitant->upper == hesitant_upper(s, x));
  CHECK(both.crisp->lower == ObjectSet{0});
  CHECK(both.crisp->upper == ObjectSet{0, 1});

  ApproxReport none = approx_report(s, std::nullopt, std::nullopt);
  CHECK_FALSE(none.hesitant.has_value());
  CHECK_FALSE(none.crisp.has_value());
}

TEST_CASE("hesitant approximation regressions") {
  std::string diag;
  auto failing = fixtures::run_fixtures("eval-approx-", &diag);
  CHECK_MESSAGE(failing.empty(), diag);
}

TEST_CASE("crisp approximation regressions") {
  std::string diag;
  auto failing = fixtures::run_fixtures("eval-crisp-approx-", &diag);
  CHECK_MESSAGE(failing.empty(), diag);
}

TEST_CASE("edge and error regressions") {
  std::string diag;
  auto failing = fixtures::run_fixtures("edge-", &diag);
  auto more = fixtures::run_fixtures("error-", &diag);
  failing.insert(failing.end(), more.begin(), more.end());
  CHECK_MESSAGE(failing.empty(), diag);
}
