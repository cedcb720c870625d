#include <vector>

#include "doctest.h"
#include "hfs/fixtures.hpp"
#include "hfs/soft.hpp"

using namespace hfs;
using fixtures::el;
using fixtures::set_over;

TEST_CASE("parameter sets reject duplicates and empties, algebra keeps order") {
  ParameterSet a({"e1", "e2", "e3"});
  ParameterSet b({"e2", "e4"});
  CHECK_THROWS_AS(ParameterSet({}), HfsError);
  CHECK_THROWS_AS(ParameterSet({"e1", "e1"}), HfsError);
  CHECK(param_intersect(a, b) == std::vector<std::string>{"e2"});
  CHECK(param_union(a, b) == std::vector<std::string>{"e1", "e2", "e3", "e4"});
  CHECK(param_minus(a, b) == std::vector<std::string>{"e1", "e3"});
  CHECK(param_subset(ParameterSet({"e2"}), a));
  CHECK_FALSE(param_subset(a, b));
  CHECK(a.contains("e3"));
  CHECK(a.index_of("e2") == 1);
}

TEST_CASE("restricted operations need overlapping parameter sets") {
  UniversePtr u = fixtures::pair_universe();
  HesitantFuzzySoftSet f = soft_restrict(fixtures::pair_F(), {"e1", "e2"});
  HesitantFuzzySoftSet g = soft_restrict(fixtures::pair_G(), {"e3", "e4"});
  CHECK_THROWS_AS(soft_restricted_intersect(f, g), EmptyParameterIntersection);
  CHECK_THROWS_AS(soft_restricted_union(f, g), EmptyParameterIntersection);
  // The extended union still works: disjoint parts are copied through.
  HesitantFuzzySoftSet e = soft_extended_union(f, g);
  CHECK(e.params().params() == std::vector<std::string>{"e1", "e2", "e3", "e4"});
  CHECK(e.image("e1") == f.image("e1"));
  CHECK(e.image("e4") == g.image("e4"));
}

TEST_CASE("soft restriction checks parameter names") {
  HesitantFuzzySoftSet f = fixtures::pair_F();
  CHECK_THROWS_AS(soft_restrict(f, {"nope"}), HfsError);
  HesitantFuzzySoftSet r = soft_restrict(f, {"e3", "e1"});
  CHECK(r.params().params() == std::vector<std::string>{"e3", "e1"});
  CHECK(r.image("e1") == f.image("e1"));
}

TEST_CASE("soft inclusion needs the parameter subset and pointwise inclusion") {
  UniversePtr u = fixtures::pair_universe();
  HesitantFuzzySoftSet f = fixtures::pair_F();
  HesitantFuzzySoftSet part = soft_restrict(f, {"e1", "e3"});
  CHECK(soft_includes(InclusionKind::P, part, f));
  CHECK_FALSE(soft_includes(InclusionKind::P, f, part));  // A not in B
  CHECK(soft_equiv(InclusionKind::P, f, f));
}

TEST_CASE("wedge and vee products are parameter-pair tables") {
  HesitantFuzzySoftSet f = soft_restrict(fixtures::pair_F(), {"e1", "e2"});
  HesitantFuzzySoftSet g = soft_restrict(fixtures::pair_G(), {"e2", "e3"});
  ProductTable w = soft_wedge(f, g);
  CHECK(w.rows == std::vector<std::string>{"e1", "e2"});
  CHECK(w.cols == std::vector<std::string>{"e2", "e3"});
  CHECK(w.at(0, 1) == hfs_intersect(f.image("e1"), g.image("e3")));
  ProductTable v = soft_vee(f, g);
  CHECK(v.at(1, 0) == hfs_union(f.image("e2"), g.image("e2")));
  CHECK(product_equal(w, w));
  CHECK_FALSE(product_equal(w, v));
}

TEST_CASE("covering condition and threshold covering") {
  UniversePtr u = make_universe({"x", "y"});
  std::vector<HesitantFuzzySet> imgs{
      set_over(u, {{"1", "0.6"}, {"0.5"}}),
      set_over(u, {{"0.4"}, {"1", "0.8", "0.2"}}),
  };
  HesitantFuzzySoftSet f(u, ParameterSet({"e1", "e2"}), imgs);
  CHECK(is_covering(f));
  // unions: x -> {1,0.6}, y -> {1,0.8,0.5}
  CHECK(beta_covers(f, el({"0.9", "0.5"}), InclusionKind::A));
  CHECK_FALSE(beta_covers(f, el({"0.9", "0.5"}), InclusionKind::N));

  // Dropping the union's reach below 1 at x breaks the covering.
  std::vector<HesitantFuzzySet> weak{
      set_over(u, {{"0.9", "0.6"}, {"0.3"}}),
      set_over(u, {{"0.4"}, {"1", "0.8", "0.2"}}),
  };
  CHECK_FALSE(is_covering(HesitantFuzzySoftSet(u, ParameterSet({"e1", "e2"}), weak)));
}

TEST_CASE("covering space construction validates and reports the failing object") {
  UniversePtr u = make_universe({"x", "y"});
  std::vector<HesitantFuzzySet> imgs{
      set_over(u, {{"1", "0.6"}, {"0.5"}}),
      set_over(u, {{"0.4"}, {"1", "0.8", "0.2"}}),
  };
  HesitantFuzzySoftSet f(u, ParameterSet({"e1", "e2"}), imgs);
  CHECK_NOTHROW(CoveringSpace(f, el({"0.9", "0.5"}), InclusionKind::A));
  try {
    CoveringSpace bad(f, el({"0.9", "0.5"}), InclusionKind::N);
    FAIL("expected NotABetaCovering");
  } catch (const NotABetaCovering& e) {
    CHECK(e.object == "x");  // union at x is {1,0.6}, min 0.6 < 0.9
  }
}

TEST_CASE("soft-set regressions") {
  std::string diag;
  auto failing = fixtures::run_fixtures("pair-", &diag);
  CHECK_MESSAGE(failing.empty(), diag);
}
