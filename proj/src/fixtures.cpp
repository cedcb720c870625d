#include "hfs/fixtures.hpp"

#include <algorithm>
#include <utility>

namespace hfs::fixtures {

HesitantElement el(std::initializer_list<std::string_view> degrees) {
  std::vector<Degree> v;
  v.reserve(degrees.size());
  for (std::string_view d : degrees) v.push_back(Degree::parse(d));
  return HesitantElement(std::move(v));
}

HesitantFuzzySet set_over(
    const UniversePtr& u,
    std::initializer_list<std::initializer_list<std::string_view>> rows) {
  std::vector<HesitantElement> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(el(row));
  return HesitantFuzzySet(u, std::move(values));
}

UniversePtr pair_universe() {
  static const UniversePtr u = make_universe({"x", "y"});
  return u;
}

HesitantFuzzySoftSet pair_F() {
  const UniversePtr u = pair_universe();
  std::vector<HesitantFuzzySet> images;
  images.push_back(set_over(u, {{"0.5", "0.3", "0.2"}, {"0.7", "0.5", "0.3"}}));
  images.push_back(set_over(u, {{"0.4", "0.3", "0.2"}, {"0.3", "0.2", "0.1"}}));
  images.push_back(set_over(u, {{"0.8", "0.6", "0.5"}, {"0.8", "0.5", "0.1"}}));
  images.push_back(set_over(u, {{"0.5", "0.3"}, {"0.6", "0.2"}}));
  images.push_back(set_over(u, {{"0.6", "0.5", "0.3"}, {"0.3", "0.2", "0.1"}}));
  return HesitantFuzzySoftSet(u, ParameterSet({"e1", "e2", "e3", "e4", "e5"}),
                              std::move(images));
}

HesitantFuzzySoftSet pair_G() {
  const UniversePtr u = pair_universe();
  std::vector<HesitantFuzzySet> images;
  images.push_back(set_over(u, {{"0.6", "0.2", "0.1"}, {"0.8", "0.5", "0.2"}}));
  images.push_back(set_over(u, {{"0.5", "0.4", "0.2"}, {"0.3", "0.3", "0.2"}}));
  images.push_back(set_over(u, {{"0.9", "0.6", "0.6"}, {"0.8", "0.5", "0.2"}}));
  images.push_back(set_over(u, {{"0.7", "0.6", "0.5"}, {"0.9", "0.8", "0.7"}}));
  images.push_back(set_over(u, {{"0.9", "0.8", "0.7"}, {"0.5", "0.4", "0.3"}}));
  return HesitantFuzzySoftSet(u, ParameterSet({"e1", "e2", "e3", "e4", "e5"}),
                              std::move(images));
}

UniversePtr eval_universe() {
  static const UniversePtr u = make_universe({"x1", "x2", "x3", "x4", "x5"});
  return u;
}

const HesitantFuzzySoftSet& eval_table() {
  static const HesitantFuzzySoftSet table = [] {
    const UniversePtr u = eval_universe();
    std::vector<HesitantFuzzySet> images;
    images.push_back(set_over(u, {{"0.5", "0.4", "0.3"},
                                  {"1", "1"},
                                  {"1", "1", "1"},
                                  {"1", "1", "0.2"},
                                  {"0.7", "0.3", "0.2"}}));
    images.push_back(set_over(u, {{"1", "1"},
                                  {"0.4", "0.3", "0.2"},
                                  {"0.5", "0.3", "0.3"},
                                  {"1", "1", "1"},
                                  {"1", "1", "1"}}));
    images.push_back(set_over(u, {{"0.7", "0.5", "0.2"},
                                  {"0.5", "0.4"},
                                  {"0.5"},
                                  {"0.5", "0.4"},
                                  {"0.6", "0.5", "0.2"}}));
    images.push_back(set_over(u, {{"0.8", "0.7"},
                                  {"0.6", "0.1"},
                                  {"0.9", "0.8", "0.2"},
                                  {"0.6", "0.5"},
                                  {"0.6", "0.6"}}));
    images.push_back(set_over(u, {{"0.8", "0.7", "0.7"},
                                  {"0.6", "0.5", "0.4", "0.3"},
                                  {"0.9", "0.8"},
                                  {"0.7", "0.6", "0.5", "0.1"},
                                  {"0.8", "0.7", "0.6", "0.1"}}));
    images.push_back(set_over(u, {{"0.6", "0.6"},
                                  {"0.7", "0.5"},
                                  {"0.7", "0.6"},
                                  {"0.8", "0.7"},
                                  {"0.7", "0.6"}}));
    images.push_back(set_over(u, {{"0.4", "0.3"},
                                  {"0.3", "0.2"},
                                  {"0.2", "0.1"},
                                  {"0.4", "0.3"},
                                  {"0.3", "0.2"}}));
    images.push_back(set_over(u, {{"0.7", "0.7", "0.5", "0.4"},
                                  {"0.6", "0.5", "0.4", "0.4"},
                                  {"0.8", "0.6", "0.5", "0.5"},
                                  {"0.7", "0.7", "0.5", "0.4"},
                                  {"0.7", "0.6", "0.5", "0.5"}}));
    images.push_back(set_over(u, {{"0.7", "0.5", "0.2"},
                                  {"0.5", "0.4"},
                                  {"0.5"},
                                  {"0.5", "0.4"},
                                  {"0.6", "0.5", "0.3"}}));
    return HesitantFuzzySoftSet(
        u, ParameterSet({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"}),
        std::move(images));
  }();
  return table;
}

HesitantFuzzySoftSet eval_slice(const std::vector<std::string>& params) {
  return soft_restrict(eval_table(), params);
}

CoveringSpace eval_space(InclusionKind kind, const HesitantElement& beta,
                         const std::vector<std::string>& params) {
  return CoveringSpace(eval_slice(params), beta, kind);
}

namespace {

// Accumulates failures for one fixture.
struct Check {
  std::string* diag = nullptr;
  bool ok = true;

  void fail(const std::string& msg) {
    ok = false;
    if (diag) *diag += "    " + msg + "\n";
  }
  void that(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void eq(const HesitantElement& got, const HesitantElement& want,
          const std::string& where) {
    if (!(got == want)) fail(where + ": got " + got.str() + ", want " + want.str());
  }
  void eq(const HesitantFuzzySet& got, const HesitantFuzzySet& want,
          const std::string& where) {
    if (got == want) return;
    if (!same_universe(got.universe(), want.universe())) {
      fail(where + ": universes differ");
      return;
    }
    for (std::size_t i = 0; i < got.size(); ++i)
      if (!(got.at(i) == want.at(i)))
        fail(where + " at " + got.universe()->name(i) + ": got " + got.at(i).str() +
             ", want " + want.at(i).str());
  }
  void eq(const HesitantFuzzySoftSet& got, const HesitantFuzzySoftSet& want,
          const std::string& where) {
    if (got == want) return;
    if (!(got.params() == want.params())) {
      fail(where + ": parameter sets differ");
      return;
    }
    bool before = ok;
    for (std::size_t j = 0; j < got.params().size(); ++j)
      eq(got.image(j), want.image(j), where + "[" + got.params().name(j) + "]");
    if (ok && before) fail(where + ": differ");
  }
  void eq(const ObjectSet& got, const ObjectSet& want, const Universe& u,
          const std::string& where) {
    if (got != want)
      fail(where + ": got " + obj_str(u, got) + ", want " + obj_str(u, want));
  }
};

ObjectSet objs(const UniversePtr& u, std::initializer_list<std::string_view> names) {
  ObjectSet out;
  for (std::string_view n : names) out.push_back(u->index_of_checked(n));
  std::sort(out.begin(), out.end());
  return out;
}

using IK = InclusionKind;

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> fx;
  auto add = [&fx](std::string id, std::function<bool(std::string*)> run) {
    fx.push_back(Fixture{std::move(id), std::move(run)});
  };

  // --- element-level orderings and operations --------------------------

  add("elem-ordering-showcase", [](std::string* diag) {
    Check c{diag};
    UniversePtr u = make_universe({"x1", "x2", "x3", "x4", "x5", "x6"});
    HesitantFuzzySet H = set_over(u, {{"0.9", "0.2"},
                                      {"0.6", "0.6", "0.5"},
                                      {"0.7", "0.5", "0.5"},
                                      {"0.8", "0.6", "0.5"},
                                      {"0.9", "0.3", "0.1"},
                                      {"0.9", "0.8", "0.7"}});
    c.that(elem_includes(IK::P, H.at("x2"), H.at("x1")), "x2 below x1 under p");
    c.that(!elem_includes(IK::P, H.at("x1"), H.at("x2")), "p is one-directional here");
    c.that(H.at("x1").mean() == Rational(11, 20),
           "mean of x1 is 11/20, got " + H.at("x1").mean().str());
    c.that(H.at("x2").mean() == Rational(17, 30),
           "mean of x2 is 17/30, got " + H.at("x2").mean().str());
    c.that(elem_includes(IK::M, H.at("x1"), H.at("x2")), "x1 below x2 under m");
    c.that(!elem_includes(IK::M, H.at("x2"), H.at("x1")), "m is one-directional here");
    c.that(elem_includes(IK::A, H.at("x2"), H.at("x3")), "x2 below x3 under a");
    c.that(elem_includes(IK::S, H.at("x3"), H.at("x4")), "x3 below x4 under s");
    c.that(elem_includes(IK::T, H.at("x1"), H.at("x5")), "x1 below x5 under t");
    c.that(elem_includes(IK::N, H.at("x3"), H.at("x6")), "x3 below x6 under n");
    c.that(!elem_includes(IK::S, H.at("x1"), H.at("x5")),
           "s needs a right side no longer than the left");
    c.that(!elem_includes(IK::T, H.at("x3"), H.at("x4")),
           "t needs a strictly longer right side");
    c.that(!elem_includes(IK::N, H.at("x2"), H.at("x3")), "n compares max to min");
    c.that(elem_includes_sot(H.at("x1"), H.at("x5")), "sot via the t branch");
    c.that(elem_includes_sot(H.at("x3"), H.at("x4")), "sot via the s branch");
    c.that(!elem_includes_sot(H.at("x2"), H.at("x1")), "sot fails both branches");
    return c.ok;
  });

  add("elem-ops-frozen", [](std::string* diag) {
    Check c{diag};
    c.eq(elem_union(el({"0.4", "0.4"}), el({"0.5", "0.3"})), el({"0.5", "0.4", "0.4"}),
         "union keeps degrees above the larger minimum");
    c.eq(elem_intersect(el({"0.4", "0.4"}), el({"0.5", "0.3"})),
         el({"0.4", "0.4", "0.3"}), "intersection keeps degrees below the smaller maximum");
    c.eq(elem_union(el({"0.6", "0.6"}), el({"0.2", "0.1"})), el({"0.6", "0.6"}),
         "union of separated operands");
    c.eq(elem_intersect(el({"0.6", "0.6"}), el({"0.2", "0.1"})), el({"0.2", "0.1"}),
         "intersection of separated operands");
    c.eq(elem_union(el({"0.5", "0.3"}), el({"0.4", "0.4"})), el({"0.5", "0.4", "0.4"}),
         "union commutes");
    c.eq(elem_complement(el({"0.5", "0.4", "0.3"})), el({"0.7", "0.6", "0.5"}),
         "complement is degree-wise 1-g");
    c.eq(elem_complement(elem_complement(el({"0.9", "0.2"}))), el({"0.9", "0.2"}),
         "complement is involutive");
    return c.ok;
  });

  add("elem-meet-threshold-counterexamples", [](std::string* diag) {
    // A threshold dominated by two elements need not be dominated by
    // their intersection: fails for m, s and sot (it holds for p, a, t
    // and n — those closure claims live in the law suite).
    Check c{diag};
    HesitantElement beta = el({"0.5", "0.4", "0.3", "0.2", "0.1"});
    HesitantElement f1 = el({"0.5", "0.4", "0.3"});
    HesitantElement f2 = el({"0.6", "0.6", "0.6", "0.6", "0.1"});
    HesitantElement f3 = el({"0.6", "0.6", "0.6", "0.6", "0.1", "0.1"});
    HesitantElement f4 = el({"0.5", "0.1"});
    HesitantElement f5 = el({"0.3", "0.3"});
    c.that(elem_includes(IK::M, beta, f4), "beta below f4 under m");
    c.that(elem_includes(IK::M, beta, f5), "beta below f5 under m");
    c.that(!elem_includes(IK::M, beta, elem_intersect(f4, f5)),
           "m does not survive the meet");
    c.that(elem_includes(IK::S, beta, f1), "beta below f1 under s");
    c.that(elem_includes(IK::S, beta, f2), "beta below f2 under s");
    c.that(!elem_includes(IK::S, beta, elem_intersect(f1, f2)),
           "s does not survive the meet");
    c.that(elem_includes(IK::S, beta, f1), "beta below f1 under s (sot case)");
    c.that(elem_includes(IK::T, beta, f3), "beta below f3 under t");
    c.that(!elem_includes_sot(beta, elem_intersect(f1, f3)),
           "sot does not survive the meet");
    return c.ok;
  });

  // --- soft-set algebra over the two-object tables ----------------------

  add("pair-restricted-intersect", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = pair_universe();
    HesitantFuzzySoftSet FA = soft_restrict(pair_F(), {"e1", "e2"});
    HesitantFuzzySoftSet GB = soft_restrict(pair_G(), {"e2", "e3"});
    HesitantFuzzySoftSet h = soft_restricted_intersect(FA, GB);
    c.that(h.params().params() == std::vector<std::string>{"e2"},
           "common parameters are {e2}");
    c.eq(h.image("e2"),
         set_over(u, {{"0.4", "0.4", "0.3", "0.2", "0.2"},
                      {"0.3", "0.3", "0.3", "0.2", "0.2", "0.1"}}),
         "restricted intersection at e2");
    return c.ok;
  });

  add("pair-restricted-union", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = pair_universe();
    HesitantFuzzySoftSet h = soft_restricted_union(soft_restrict(pair_F(), {"e1", "e2"}),
                                                   soft_restrict(pair_G(), {"e2", "e3"}));
    c.that(h.params().params() == std::vector<std::string>{"e2"},
           "common parameters are {e2}");
    c.eq(h.image("e2"),
         set_over(u, {{"0.5", "0.4", "0.4", "0.3", "0.2", "0.2"},
                      {"0.3", "0.3", "0.3", "0.2", "0.2"}}),
         "restricted union at e2");
    return c.ok;
  });

  add("pair-extended-union", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = pair_universe();
    HesitantFuzzySoftSet h = soft_extended_union(soft_restrict(pair_F(), {"e1", "e2"}),
                                                 soft_restrict(pair_G(), {"e2", "e3"}));
    c.that(h.params().params() == std::vector<std::string>({"e1", "e2", "e3"}),
           "parameters are {e1,e2,e3}");
    c.eq(h.image("e1"), pair_F().image("e1"), "e1 comes from the left operand alone");
    c.eq(h.image("e2"),
         set_over(u, {{"0.5", "0.4", "0.4", "0.3", "0.2", "0.2"},
                      {"0.3", "0.3", "0.3", "0.2", "0.2"}}),
         "e2 is the union of both images");
    c.eq(h.image("e3"), pair_G().image("e3"), "e3 comes from the right operand alone");
    return c.ok;
  });

  add("pair-soft-inclusions", [](std::string* diag) {
    Check c{diag};
    const HesitantFuzzySoftSet F = pair_F();
    const HesitantFuzzySoftSet G = pair_G();
    c.that(soft_includes(IK::P, soft_restrict(F, {"e1", "e2"}),
                         soft_restrict(G, {"e1", "e2", "e3"})),
           "(F,{e1,e2}) below (G,{e1,e2,e3}) under p");
    c.that(soft_includes(IK::A, soft_restrict(F, {"e2", "e3"}),
                         soft_restrict(G, {"e2", "e3", "e4"})),
           "(F,{e2,e3}) below (G,{e2,e3,e4}) under a");
    c.that(soft_includes(IK::M, soft_restrict(F, {"e2", "e3"}),
                         soft_restrict(G, {"e2", "e3", "e4"})),
           "(F,{e2,e3}) below (G,{e2,e3,e4}) under m");
    c.that(soft_includes(IK::S, soft_restrict(F, {"e2", "e3"}),
                         soft_restrict(G, {"e2", "e3", "e4"})),
           "(F,{e2,e3}) below (G,{e2,e3,e4}) under s");
    c.that(soft_includes(IK::T, soft_restrict(F, {"e4"}), soft_restrict(G, {"e4", "e5"})),
           "(F,{e4}) below (G,{e4,e5}) under t");
    c.that(soft_includes(IK::N, soft_restrict(F, {"e4", "e5"}),
                         soft_restrict(G, {"e3", "e4", "e5"})),
           "(F,{e4,e5}) below (G,{e3,e4,e5}) under n");
    c.that(!soft_includes(IK::P, soft_restrict(F, {"e1", "e2", "e3"}),
                          soft_restrict(G, {"e1", "e2"})),
           "parameter containment is required");
    c.that(!soft_includes(IK::N, soft_restrict(F, {"e1"}), soft_restrict(G, {"e1"})),
           "n fails at e1");
    c.that(!soft_includes(IK::S, soft_restrict(F, {"e4"}), soft_restrict(G, {"e4"})),
           "s fails at e4 on length");
    c.that(soft_equiv(IK::P, soft_restrict(F, {"e1", "e2"}),
                      soft_restrict(F, {"e1", "e2"})),
           "soft equivalence is reflexive");
    return c.ok;
  });

  add("pair-complement-involution", [](std::string* diag) {
    Check c{diag};
    const HesitantFuzzySoftSet F = pair_F();
    c.eq(soft_complement(F).image("e1").at("x"), el({"0.8", "0.7", "0.5"}),
         "complement of F(e1) at x");
    c.eq(soft_complement(soft_complement(F)), F, "soft complement is involutive");
    return c.ok;
  });

  add("pair-restricted-demorgan", [](std::string* diag) {
    Check c{diag};
    HesitantFuzzySoftSet FA = soft_restrict(pair_F(), {"e1", "e2"});
    HesitantFuzzySoftSet GB = soft_restrict(pair_G(), {"e2", "e3"});
    c.eq(soft_complement(soft_restricted_intersect(FA, GB)),
         soft_restricted_union(soft_complement(FA), soft_complement(GB)),
         "complement of restricted intersection");
    c.eq(soft_complement(soft_restricted_union(FA, GB)),
         soft_restricted_intersect(soft_complement(FA), soft_complement(GB)),
         "complement of restricted union");
    return c.ok;
  });

  add("pair-product-demorgan", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = pair_universe();
    HesitantFuzzySoftSet FA = soft_restrict(pair_F(), {"e1", "e2"});
    HesitantFuzzySoftSet GB = soft_restrict(pair_G(), {"e2", "e3"});
    ProductTable w = soft_wedge(FA, GB);
    c.eq(w.at(0, 0),
         set_over(u, {{"0.5", "0.5", "0.4", "0.3", "0.2", "0.2"},
                      {"0.3", "0.3", "0.3", "0.2"}}),
         "wedge cell (e1,e2)");
    c.that(product_equal(product_complement(w),
                         soft_vee(soft_complement(FA), soft_complement(GB))),
           "complement of wedge is vee of complements");
    c.that(product_equal(product_complement(soft_vee(FA, GB)),
                         soft_wedge(soft_complement(FA), soft_complement(GB))),
           "complement of vee is wedge of complements");
    return c.ok;
  });

  // --- covering conditions over the five-object table -------------------

  add("eval-covering-ones", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    HesitantFuzzySoftSet f = eval_slice({"e1", "e2"});
    c.eq(ones_of(f),
         set_over(u, {{"1", "1"}, {"1", "1"}, {"1", "1", "1"}, {"1", "1", "1"},
                      {"1", "1", "1"}}),
         "reference set lengths follow the shortest image");
    c.eq(family_union(f.images()),
         set_over(u, {{"1", "1"}, {"1", "1"}, {"1", "1", "1"},
                      {"1", "1", "1", "1", "1"}, {"1", "1", "1"}}),
         "union of images over {e1,e2}");
    c.that(is_covering(f), "{e1,e2} is a covering");
    c.that(!is_covering(eval_slice({"e1"})), "{e1} alone is not a covering");
    return c.ok;
  });

  add("eval-beta-covering-kinds", [](std::string* diag) {
    Check c{diag};
    HesitantElement beta = el({"0.5", "0.4", "0.3"});
    c.that(beta_covers(eval_slice({"e1", "e2"}), beta, IK::P), "{e1,e2} covers under p");
    c.that(beta_covers(eval_slice({"e1", "e2"}), beta, IK::A), "{e1,e2} covers under a");
    c.that(beta_covers(eval_slice({"e2", "e3"}), beta, IK::M), "{e2,e3} covers under m");
    c.that(beta_covers(eval_slice({"e3", "e4"}), beta, IK::S), "{e3,e4} covers under s");
    c.that(beta_covers(eval_slice({"e4", "e5"}), beta, IK::T), "{e4,e5} covers under t");
    c.that(beta_covers(eval_slice({"e5", "e6"}), beta, IK::N), "{e5,e6} covers under n");
    c.that(!beta_covers(eval_slice({"e7"}), beta, IK::P), "{e7} does not cover under p");
    try {
      CoveringSpace bad(eval_slice({"e7"}), beta, IK::P);
      c.fail("constructing a space over {e7} did not throw");
    } catch (const NotABetaCovering& e) {
      c.that(e.object == "x1", "first failing object is x1, got " + e.object);
    }
    // The threshold condition is weaker than the full covering condition:
    // {e1} satisfies the former under p but not the latter.
    try {
      CoveringSpace ok(eval_slice({"e1"}), beta, IK::P);
      c.that(!is_covering(ok.soft()), "{e1} is a p threshold covering but not a covering");
    } catch (const NotABetaCovering&) {
      c.fail("{e1} should satisfy the p threshold condition");
    }
    return c.ok;
  });

  add("eval-union-rows", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    c.eq(family_union(eval_slice({"e2", "e3"}).images()).at("x2"),
         el({"0.5", "0.4", "0.4"}), "union over {e2,e3} at x2");
    c.eq(family_union(eval_slice({"e3", "e4"}).images()),
         set_over(u, {{"0.8", "0.7", "0.7"},
                      {"0.6", "0.5", "0.4"},
                      {"0.9", "0.8", "0.5"},
                      {"0.6", "0.5", "0.5"},
                      {"0.6", "0.6", "0.6"}}),
         "union over {e3,e4}");
    c.eq(family_union(eval_slice({"e4", "e5"}).images()),
         set_over(u, {{"0.8", "0.8", "0.7", "0.7", "0.7"},
                      {"0.6", "0.6", "0.5", "0.4", "0.3"},
                      {"0.9", "0.9", "0.8", "0.8"},
                      {"0.7", "0.6", "0.6", "0.5", "0.5"},
                      {"0.8", "0.7", "0.6", "0.6", "0.6"}}),
         "union over {e4,e5}");
    c.eq(family_union(eval_slice({"e5", "e6"}).images()),
         set_over(u, {{"0.8", "0.7", "0.7"},
                      {"0.7", "0.6", "0.5", "0.5"},
                      {"0.9", "0.8"},
                      {"0.8", "0.7", "0.7"},
                      {"0.8", "0.7", "0.7", "0.6", "0.6"}}),
         "union over {e5,e6}");
    c.eq(family_union(eval_slice({"e6", "e7"}).images()),
         set_over(u, {{"0.6", "0.6"},
                      {"0.7", "0.5"},
                      {"0.7", "0.6"},
                      {"0.8", "0.7"},
                      {"0.7", "0.6"}}),
         "union over {e6,e7}");
    c.eq(family_union(eval_slice({"e6", "e8"}).images()),
         set_over(u, {{"0.7", "0.7", "0.6", "0.6"},
                      {"0.7", "0.6", "0.5", "0.5"},
                      {"0.8", "0.7", "0.6", "0.6"},
                      {"0.8", "0.7", "0.7", "0.7"},
                      {"0.7", "0.7", "0.6", "0.6"}}),
         "union over {e6,e8}");
    c.eq(family_union(eval_slice({"e4", "e9"}).images()),
         set_over(u, {{"0.8", "0.7", "0.7"},
                      {"0.6", "0.5", "0.4"},
                      {"0.9", "0.8", "0.5"},
                      {"0.6", "0.5", "0.5"},
                      {"0.6", "0.6", "0.6"}}),
         "union over {e4,e9}");
    return c.ok;
  });

  // --- fuzzy neighborhoods ----------------------------------------------

  add("eval-fuzzy-nbhd-p", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sp = eval_space(IK::P, el({"0.5", "0.4", "0.3"}), {"e1", "e2"});
    FuzzyNeighborhood n1 = fuzzy_neighborhood(sp, "x1");
    c.that(n1.defined(), "neighborhood of x1 is defined");
    c.that(n1.qualifying == std::vector<std::string>({"e1", "e2"}),
           "both parameters qualify at x1");
    c.eq(n1.get(),
         set_over(u, {{"0.5", "0.4", "0.3"},
                      {"0.4", "0.3", "0.2"},
                      {"0.5", "0.3", "0.3"},
                      {"1", "1", "1", "1", "1", "0.2"},
                      {"0.7", "0.3", "0.2"}}),
         "neighborhood of x1");
    FuzzyNeighborhood n2 = fuzzy_neighborhood(sp, "x2");
    c.that(n2.qualifying == std::vector<std::string>({"e1"}), "only e1 qualifies at x2");
    c.eq(n2.get(), eval_table().image("e1"), "neighborhood of x2 is F(e1)");
    return c.ok;
  });

  add("eval-fuzzy-nbhd-a", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sa = eval_space(IK::A, el({"0.5", "0.4", "0.3"}), {"e1", "e2"});
    c.eq(fuzzy_neighborhood(sa, "x1").get(),
         set_over(u, {{"0.5", "0.4", "0.3"},
                      {"0.4", "0.3", "0.2"},
                      {"0.5", "0.3", "0.3"},
                      {"1", "1", "1", "1", "1", "0.2"},
                      {"0.7", "0.3", "0.2"}}),
         "neighborhood of x1");
    c.eq(fuzzy_neighborhood(sa, "x2").get(), eval_table().image("e1"),
         "neighborhood of x2 is F(e1)");
    return c.ok;
  });

  add("eval-fuzzy-nbhd-m", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sm = eval_space(IK::M, el({"0.5", "0.4", "0.3"}), {"e2", "e3"});
    c.eq(fuzzy_neighborhood(sm, "x1").get(),
         set_over(u, {{"0.7", "0.5", "0.2"},
                      {"0.4", "0.4", "0.3", "0.2"},
                      {"0.5", "0.5", "0.3", "0.3"},
                      {"0.5", "0.4"},
                      {"0.6", "0.5", "0.2"}}),
         "neighborhood of x1");
    c.eq(fuzzy_neighborhood(sm, "x2").get(), eval_table().image("e3"),
         "neighborhood of x2 is F(e3)");
    return c.ok;
  });

  add("eval-fuzzy-nbhd-s", [](std::string* diag) {
    Check c{diag};
    CoveringSpace ss = eval_space(IK::S, el({"0.5", "0.4", "0.3"}), {"e3", "e4"});
    c.eq(fuzzy_neighborhood(ss, "x1").get(), eval_table().image("e4"),
         "neighborhood of x1 is F(e4)");
    c.eq(fuzzy_neighborhood(ss, "x2").get(), eval_table().image("e3"),
         "neighborhood of x2 is F(e3)");
    return c.ok;
  });

  add("eval-fuzzy-nbhd-t", [](std::string* diag) {
    Check c{diag};
    CoveringSpace st = eval_space(IK::T, el({"0.5", "0.4", "0.3"}), {"e4", "e5"});
    FuzzyNeighborhood n1 = fuzzy_neighborhood(st, "x1");
    c.that(!n1.defined(), "neighborhood of x1 is Null");
    c.that(n1.qualifying.empty(), "no parameter qualifies at x1");
    c.eq(fuzzy_neighborhood(st, "x2").get(), eval_table().image("e5"),
         "neighborhood of x2 is F(e5)");
    return c.ok;
  });

  add("eval-fuzzy-nbhd-n", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sn = eval_space(IK::N, el({"0.5", "0.4", "0.3"}), {"e5", "e6"});
    c.eq(fuzzy_neighborhood(sn, "x1").get(),
         set_over(u, {{"0.6", "0.6"},
                      {"0.6", "0.5", "0.5", "0.4", "0.3"},
                      {"0.7", "0.6"},
                      {"0.7", "0.7", "0.6", "0.5", "0.1"},
                      {"0.7", "0.7", "0.6", "0.6", "0.1"}}),
         "neighborhood of x1");
    c.eq(fuzzy_neighborhood(sn, "x5").get(), eval_table().image("e6"),
         "neighborhood of x5 is F(e6)");
    return c.ok;
  });

  // --- crisp neighborhoods ----------------------------------------------

  add("eval-crisp-nbhd-p", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sp = eval_space(IK::P, el({"0.5", "0.4", "0.3"}), {"e1", "e2"});
    c.eq(crisp_neighborhood(sp, "x1").get(), objs(u, {"x1", "x3", "x4", "x5"}), *u,
         "crisp neighborhood of x1");
    return c.ok;
  });

  add("eval-crisp-nbhd-a", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sa = eval_space(IK::A, el({"0.5", "0.4", "0.3"}), {"e1", "e2"});
    c.eq(crisp_neighborhood(sa, "x1").get(), objs(u, {"x1", "x3"}), *u,
         "crisp neighborhood of x1");
    return c.ok;
  });

  add("eval-crisp-nbhd-m", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sm = eval_space(IK::M, el({"0.5", "0.4", "0.3"}), {"e2", "e3"});
    // x3 sits exactly on the threshold: mean {0.5,0.5,0.3,0.3} = 2/5 = mean beta.
    c.eq(crisp_neighborhood(sm, "x1").get(), objs(u, {"x1", "x3", "x4", "x5"}), *u,
         "crisp neighborhood of x1");
    return c.ok;
  });

  add("eval-crisp-nbhd-s", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace ss = eval_space(IK::S, el({"0.5", "0.4", "0.3"}), {"e3", "e4"});
    c.eq(crisp_neighborhood(ss, "x1").get(), objs(u, {"x1", "x4", "x5"}), *u,
         "crisp neighborhood of x1");
    return c.ok;
  });

  add("eval-crisp-nbhd-t", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace st = eval_space(IK::T, el({"0.5", "0.4", "0.3"}), {"e4", "e5"});
    c.that(!crisp_neighborhood(st, "x1").defined(), "crisp neighborhood of x1 is Null");
    c.eq(crisp_neighborhood(st, "x2").get(), objs(u, {"x2", "x4", "x5"}), *u,
         "crisp neighborhood of x2");
    return c.ok;
  });

  add("eval-crisp-nbhd-n", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sn = eval_space(IK::N, el({"0.5", "0.4", "0.3"}), {"e5", "e6"});
    c.eq(crisp_neighborhood(sn, "x1").get(), objs(u, {"x1", "x3"}), *u,
         "crisp neighborhood of x1");
    return c.ok;
  });

  // --- hesitant approximations ------------------------------------------

  // The target used throughout the hesitant approximation cases.
  auto approx_target = [] {
    return set_over(eval_universe(), {{"0.2", "0.1"},
                                      {"0.2", "0.1"},
                                      {"0.1", "0.1"},
                                      {"0.2", "0.1"},
                                      {"0.2", "0.2"}});
  };
  HesitantElement lower_row =
      el({"0.3", "0.3", "0.3", "0.3", "0.2", "0.2"});
  HesitantElement upper_row = el({"0.2", "0.2", "0.2", "0.2", "0.2"});

  auto check_constant_rows = [](Check& c, const CoveringSpace& space,
                                const HesitantFuzzySet& target,
                                const HesitantElement& want_lower,
                                const HesitantElement& want_upper) {
    HesitantFuzzySet lo = hesitant_lower(space, target);
    HesitantFuzzySet up = hesitant_upper(space, target);
    for (std::size_t i = 0; i < lo.size(); ++i) {
      c.eq(lo.at(i), want_lower, "lower at " + lo.universe()->name(i));
      c.eq(up.at(i), want_upper, "upper at " + up.universe()->name(i));
    }
  };

  add("eval-approx-p", [=](std::string* diag) {
    Check c{diag};
    CoveringSpace sp = eval_space(IK::P, el({"0.5", "0.3", "0.2"}), {"e6", "e7"});
    for (std::size_t x = 0; x < 5; ++x)
      c.eq(fuzzy_neighborhood(sp, x).get(), eval_table().image("e6"),
           "every neighborhood is F(e6)");
    check_constant_rows(c, sp, approx_target(), lower_row, upper_row);
    return c.ok;
  });

  add("eval-approx-a", [=](std::string* diag) {
    Check c{diag};
    CoveringSpace sa = eval_space(IK::A, el({"0.5", "0.3", "0.2"}), {"e6", "e7"});
    for (std::size_t x = 0; x < 5; ++x)
      c.eq(fuzzy_neighborhood(sa, x).get(), eval_table().image("e6"),
           "every neighborhood is F(e6)");
    check_constant_rows(c, sa, approx_target(), lower_row, upper_row);
    return c.ok;
  });

  add("eval-approx-s", [=](std::string* diag) {
    Check c{diag};
    CoveringSpace ss = eval_space(IK::S, el({"0.5", "0.3", "0.2"}), {"e6", "e7"});
    for (std::size_t x = 0; x < 5; ++x)
      c.eq(fuzzy_neighborhood(ss, x).get(), eval_table().image("e6"),
           "every neighborhood is F(e6)");
    check_constant_rows(c, ss, approx_target(), lower_row, upper_row);
    return c.ok;
  });

  add("eval-approx-n", [=](std::string* diag) {
    Check c{diag};
    CoveringSpace sn = eval_space(IK::N, el({"0.5", "0.3", "0.2"}), {"e6", "e7"});
    for (std::size_t x = 0; x < 5; ++x)
      c.eq(fuzzy_neighborhood(sn, x).get(), eval_table().image("e6"),
           "every neighborhood is F(e6)");
    check_constant_rows(c, sn, approx_target(), lower_row, upper_row);
    return c.ok;
  });

  add("eval-approx-m-faithful", [=](std::string* diag) {
    // Under the mean ordering, F(e7) also qualifies at x1 and x4 (mean
    // 0.35 >= 1/3), so those neighborhoods shrink to F(e6) n F(e7) and
    // the approximations there differ from the p case.
    Check c{diag};
    CoveringSpace sm = eval_space(IK::M, el({"0.5", "0.3", "0.2"}), {"e6", "e7"});
    HesitantFuzzySet both =
        hfs_intersect(eval_table().image("e6"), eval_table().image("e7"));
    c.eq(fuzzy_neighborhood(sm, "x1").get(), both, "neighborhood of x1");
    c.eq(fuzzy_neighborhood(sm, "x4").get(), both, "neighborhood of x4");
    c.eq(fuzzy_neighborhood(sm, "x2").get(), eval_table().image("e6"),
         "neighborhood of x2");
    c.eq(fuzzy_neighborhood(sm, "x3").get(), eval_table().image("e6"),
         "neighborhood of x3");
    c.eq(fuzzy_neighborhood(sm, "x5").get(), eval_table().image("e6"),
         "neighborhood of x5");
    HesitantFuzzySet lo = hesitant_lower(sm, approx_target());
    HesitantFuzzySet up = hesitant_upper(sm, approx_target());
    HesitantElement tight_lower = el({"0.7", "0.7", "0.7", "0.7", "0.6", "0.6"});
    HesitantElement tight_upper =
        el({"0.2", "0.2", "0.2", "0.2", "0.2", "0.2", "0.2"});
    c.eq(lo.at("x1"), tight_lower, "lower at x1");
    c.eq(lo.at("x4"), tight_lower, "lower at x4");
    c.eq(up.at("x1"), tight_upper, "upper at x1");
    c.eq(up.at("x4"), tight_upper, "upper at x4");
    for (const char* x : {"x2", "x3", "x5"}) {
      c.eq(lo.at(x), lower_row, std::string("lower at ") + x);
      c.eq(up.at(x), upper_row, std::string("upper at ") + x);
    }
    return c.ok;
  });

  add("eval-approx-t", [=](std::string* diag) {
    Check c{diag};
    CoveringSpace st = eval_space(IK::T, el({"0.5", "0.3", "0.2"}), {"e6", "e8"});
    for (std::size_t x = 0; x < 5; ++x)
      c.eq(fuzzy_neighborhood(st, x).get(), eval_table().image("e8"),
           "every neighborhood is F(e8)");
    HesitantElement want_lower =
        el({"0.5", "0.5", "0.5", "0.5", "0.5", "0.5", "0.5", "0.4", "0.4", "0.4",
            "0.3", "0.3", "0.3", "0.3", "0.3", "0.2"});
    check_constant_rows(c, st, approx_target(), want_lower, upper_row);
    return c.ok;
  });

  // --- crisp approximations ----------------------------------------------

  add("eval-crisp-approx-p", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sp = eval_space(IK::P, el({"0.5", "0.4", "0.3"}), {"e1", "e2"});
    c.eq(crisp_neighborhood(sp, "x2").get(), obj_universe(*u), *u,
         "crisp neighborhood of x2 is the whole universe");
    ObjectSet target = objs(u, {"x1", "x2"});
    c.eq(crisp_lower(sp, target), ObjectSet{}, *u, "lower approximation");
    c.eq(crisp_upper(sp, target), obj_universe(*u), *u, "upper approximation");
    return c.ok;
  });

  add("eval-crisp-approx-a-faithful", [](std::string* diag) {
    // Every crisp a-neighborhood contains x1 (and none is inside
    // {x1,x2}), so the pair comes out as (empty, U).
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sa = eval_space(IK::A, el({"0.5", "0.4", "0.3"}), {"e1", "e2"});
    c.eq(crisp_neighborhood(sa, "x1").get(), objs(u, {"x1", "x3"}), *u,
         "crisp neighborhood of x1");
    c.eq(crisp_neighborhood(sa, "x2").get(), objs(u, {"x1", "x2", "x3"}), *u,
         "crisp neighborhood of x2");
    c.eq(crisp_neighborhood(sa, "x3").get(), objs(u, {"x1", "x3"}), *u,
         "crisp neighborhood of x3");
    c.eq(crisp_neighborhood(sa, "x4").get(), objs(u, {"x1", "x3", "x4", "x5"}), *u,
         "crisp neighborhood of x4");
    c.eq(crisp_neighborhood(sa, "x5").get(), objs(u, {"x1", "x3", "x4", "x5"}), *u,
         "crisp neighborhood of x5");
    ObjectSet target = objs(u, {"x1", "x2"});
    c.eq(crisp_lower(sa, target), ObjectSet{}, *u, "lower approximation");
    c.eq(crisp_upper(sa, target), obj_universe(*u), *u, "upper approximation");
    return c.ok;
  });

  add("eval-crisp-approx-m", [](std::string* diag) {
    // The mean kind is not reflexive: x3 drops out of its own
    // neighborhood, so the lower approximation can overshoot the target
    // and the upper approximation can miss it.
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sm = eval_space(IK::M, el({"0.5", "0.4", "0.3"}), {"e3", "e4"});
    c.eq(fuzzy_neighborhood(sm, "x3").get(),
         set_over(u, {{"0.7", "0.7", "0.5", "0.2"},
                      {"0.5", "0.4", "0.1"},
                      {"0.5", "0.2"},
                      {"0.5", "0.5", "0.4"},
                      {"0.6", "0.6", "0.6", "0.5", "0.2"}}),
         "fuzzy neighborhood of x3");
    c.eq(crisp_neighborhood(sm, "x3").get(), objs(u, {"x1", "x4", "x5"}), *u,
         "crisp neighborhood of x3");
    std::size_t x3 = u->index_of_checked("x3");
    ObjectSet in = crisp_lower(sm, objs(u, {"x1", "x2", "x4", "x5"}));
    c.that(obj_contains(in, x3), "x3 lies in the lower approximation of its complement");
    ObjectSet out = crisp_upper(sm, objs(u, {"x3"}));
    c.that(!obj_contains(out, x3), "x3 misses the upper approximation of {x3}");
    return c.ok;
  });

  add("eval-crisp-approx-s", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace ss = eval_space(IK::S, el({"0.5", "0.4", "0.3"}), {"e4", "e9"});
    c.eq(fuzzy_neighborhood(ss, "x5").get(),
         set_over(u, {{"0.7", "0.7", "0.5", "0.2"},
                      {"0.5", "0.4", "0.1"},
                      {"0.5", "0.2"},
                      {"0.5", "0.5", "0.4"},
                      {"0.6", "0.6", "0.6", "0.5", "0.3"}}),
         "fuzzy neighborhood of x5");
    c.eq(crisp_neighborhood(ss, "x5").get(), objs(u, {"x4"}), *u,
         "crisp neighborhood of x5");
    std::size_t x5 = u->index_of_checked("x5");
    ObjectSet in = crisp_lower(ss, objs(u, {"x1", "x2", "x3", "x4"}));
    c.that(obj_contains(in, x5), "x5 lies in the lower approximation of its complement");
    ObjectSet out = crisp_upper(ss, objs(u, {"x5"}));
    c.that(!obj_contains(out, x5), "x5 misses the upper approximation of {x5}");
    return c.ok;
  });

  add("eval-crisp-approx-t", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace st = eval_space(IK::T, el({"0.5", "0.4", "0.3"}), {"e6", "e8"});
    for (std::size_t x = 0; x < 5; ++x) {
      c.eq(fuzzy_neighborhood(st, x).get(), eval_table().image("e8"),
           "every neighborhood is F(e8)");
      c.eq(crisp_neighborhood(st, x).get(), obj_universe(*u), *u,
           "every crisp neighborhood is the whole universe");
    }
    ObjectSet target = objs(u, {"x1", "x2"});
    c.eq(crisp_lower(st, target), ObjectSet{}, *u, "lower approximation");
    c.eq(crisp_upper(st, target), obj_universe(*u), *u, "upper approximation");
    return c.ok;
  });

  add("eval-crisp-approx-n", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace sn = eval_space(IK::N, el({"0.5", "0.4", "0.3"}), {"e6", "e7"});
    for (std::size_t x = 0; x < 5; ++x) {
      c.eq(fuzzy_neighborhood(sn, x).get(), eval_table().image("e6"),
           "every neighborhood is F(e6)");
      c.eq(crisp_neighborhood(sn, x).get(), obj_universe(*u), *u,
           "every crisp neighborhood is the whole universe");
    }
    ObjectSet target = objs(u, {"x1", "x2"});
    c.eq(crisp_lower(sn, target), ObjectSet{}, *u, "lower approximation");
    c.eq(crisp_upper(sn, target), obj_universe(*u), *u, "upper approximation");
    return c.ok;
  });

  // A valid m-kind space can leave an object's own neighborhood value
  // below the threshold: the crisp neighborhood is then defined but
  // empty, so the empty target's lower approximation is {x} rather than
  // the empty set, and the full target's upper approximation is empty
  // rather than the whole universe.
  add("edge-empty-crisp-neighborhood", [](std::string* diag) {
    Check c{diag};
    UniversePtr u = make_universe({"x"});
    std::vector<HesitantFuzzySet> images;
    images.push_back(set_over(u, {{"0.5", "0.1"}}));
    images.push_back(set_over(u, {{"0.3", "0.3"}}));
    HesitantFuzzySoftSet f(u, ParameterSet({"e1", "e2"}), std::move(images));
    HesitantElement beta = el({"0.5", "0.4", "0.3", "0.2", "0.1"});
    c.that(beta_covers(f, beta, IK::M), "the union's mean clears the threshold mean");
    CoveringSpace s(f, beta, IK::M);
    FuzzyNeighborhood n = fuzzy_neighborhood(s, "x");
    c.that(n.defined(), "both parameters qualify");
    c.eq(n.get().at("x"), el({"0.3", "0.3", "0.1"}), "neighborhood value at x");
    c.that(!elem_includes(IK::M, beta, n.get().at("x")),
           "the intersection's mean drops below the threshold mean");
    CrispNeighborhood cn = crisp_neighborhood(s, "x");
    c.that(cn.defined(), "the crisp neighborhood is defined");
    c.that(cn.defined() && cn.get().empty(), "the crisp neighborhood is empty");
    c.eq(crisp_lower(s, ObjectSet{}), objs(u, {"x"}), *u, "lower of the empty target");
    c.eq(crisp_upper(s, obj_universe(*u)), ObjectSet{}, *u, "upper of the full target");
    return c.ok;
  });

  add("error-undefined-neighborhood", [](std::string* diag) {
    Check c{diag};
    const UniversePtr u = eval_universe();
    CoveringSpace st = eval_space(IK::T, el({"0.5", "0.4", "0.3"}), {"e4", "e5"});
    c.that(!fuzzy_neighborhood(st, "x1").defined(), "fuzzy neighborhood of x1 is Null");
    c.that(!crisp_neighborhood(st, "x1").defined(), "crisp neighborhood of x1 is Null");
    c.that(!all_defined(st), "the space is not fully defined");
    HesitantFuzzySet target = set_over(u, {{"0.2", "0.1"},
                                           {"0.2", "0.1"},
                                           {"0.1", "0.1"},
                                           {"0.2", "0.1"},
                                           {"0.2", "0.2"}});
    try {
      hesitant_lower(st, target);
      c.fail("hesitant lower did not throw");
    } catch (const UndefinedNeighborhood& e) {
      c.that(e.object == "x1", "lower: failing object is x1, got " + e.object);
    }
    try {
      crisp_upper(st, objs(u, {"x2"}));
      c.fail("crisp upper did not throw");
    } catch (const UndefinedNeighborhood& e) {
      c.that(e.object == "x1", "upper: failing object is x1, got " + e.object);
    }
    return c.ok;
  });

  return fx;
}

}  // namespace

const std::vector<Fixture>& paper_fixtures() {
  static const std::vector<Fixture> fx = build_fixtures();
  return fx;
}

std::vector<std::string> run_fixtures(std::string_view id_prefix, std::string* diag) {
  std::vector<std::string> failing;
  for (const Fixture& f : paper_fixtures()) {
    if (!std::string_view(f.id).starts_with(id_prefix)) continue;
    std::string local;
    if (!f.run(&local)) {
      failing.push_back(f.id);
      if (diag) *diag += "  " + f.id + "\n" + local;
    }
  }
  return failing;
}

}  // namespace hfs::fixtures
