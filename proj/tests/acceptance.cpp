// Acceptance gate: each criterion prints one PASS/FAIL line.  Run with a
// number 1..9 to check a single criterion, or with no arguments for all.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "hfs/fixtures.hpp"
#include "hfs/io.hpp"
#include "hfs/laws.hpp"
#include "lawgen.hpp"

namespace {

using namespace hfs;
using fixtures::el;
using fixtures::eval_space;
using fixtures::eval_table;
using fixtures::eval_universe;
using fixtures::set_over;
using IK = InclusionKind;

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond) detail += "    fail: " + what + "\n";
  return cond;
}

ObjectSet objs(const UniversePtr& u, std::initializer_list<std::string_view> names) {
  ObjectSet out;
  for (std::string_view n : names) out.push_back(u->index_of_checked(n));
  std::sort(out.begin(), out.end());
  return out;
}

// 1. Soft-set algebra tables: restricted intersection/union and the
// extended union of (F,{e1,e2}) and (G,{e2,e3}), all cells exact.
bool run_table_algebra(std::string& d) {
  const UniversePtr u = fixtures::pair_universe();
  HesitantFuzzySoftSet FA = soft_restrict(fixtures::pair_F(), {"e1", "e2"});
  HesitantFuzzySoftSet GB = soft_restrict(fixtures::pair_G(), {"e2", "e3"});
  bool ok = true;

  HesitantFuzzySoftSet h1 = soft_restricted_intersect(FA, GB);
  ok &= expect(h1.params().params() == std::vector<std::string>{"e2"},
               "restricted intersection acts on {e2}", d);
  ok &= expect(h1.image("e2") ==
                   set_over(u, {{"0.4", "0.4", "0.3", "0.2", "0.2"},
                                {"0.3", "0.3", "0.3", "0.2", "0.2", "0.1"}}),
               "restricted intersection at e2", d);

  HesitantFuzzySoftSet h2 = soft_restricted_union(FA, GB);
  ok &= expect(h2.image("e2") ==
                   set_over(u, {{"0.5", "0.4", "0.4", "0.3", "0.2", "0.2"},
                                {"0.3", "0.3", "0.3", "0.2", "0.2"}}),
               "restricted union at e2", d);

  HesitantFuzzySoftSet h3 = soft_extended_union(FA, GB);
  ok &= expect(h3.params().params() == std::vector<std::string>{"e1", "e2", "e3"},
               "extended union acts on {e1,e2,e3}", d);
  ok &= expect(h3.image("e1") == FA.image("e1"), "extended union keeps e1 from the left", d);
  ok &= expect(h3.image("e2") == h2.image("e2"), "extended union merges e2", d);
  ok &= expect(h3.image("e3") == GB.image("e3"), "extended union keeps e3 from the right", d);
  return ok;
}

// 2. The six validations over the nine-column table, plus the listed
// fuzzy neighborhoods (t-kind at x1 is Null).
bool run_fuzzy_neighborhoods(std::string& d) {
  const UniversePtr u = eval_universe();
  const HesitantElement beta = el({"0.5", "0.4", "0.3"});
  bool ok = true;

  struct SpaceSpec {
    IK kind;
    std::vector<std::string> params;
  };
  const std::vector<SpaceSpec> specs = {
      {IK::P, {"e1", "e2"}}, {IK::A, {"e1", "e2"}}, {IK::M, {"e2", "e3"}},
      {IK::S, {"e3", "e4"}}, {IK::T, {"e4", "e5"}}, {IK::N, {"e5", "e6"}}};
  for (const SpaceSpec& spec : specs) {
    try {
      eval_space(spec.kind, beta, spec.params);
    } catch (const HfsError& e) {
      ok &= expect(false,
                   std::string("validation under ") + kind_letter(spec.kind) + ": " +
                       e.what(),
                   d);
    }
  }
  if (!ok) return false;

  HesitantFuzzySet meet12 = set_over(u, {{"0.5", "0.4", "0.3"},
                                         {"0.4", "0.3", "0.2"},
                                         {"0.5", "0.3", "0.3"},
                                         {"1", "1", "1", "1", "1", "0.2"},
                                         {"0.7", "0.3", "0.2"}});
  CoveringSpace sp = eval_space(IK::P, beta, {"e1", "e2"});
  ok &= expect(fuzzy_neighborhood(sp, "x1").get() == meet12, "p: neighborhood of x1", d);
  ok &= expect(fuzzy_neighborhood(sp, "x2").get() == eval_table().image("e1"),
               "p: neighborhood of x2 is F(e1)", d);

  CoveringSpace sa = eval_space(IK::A, beta, {"e1", "e2"});
  ok &= expect(fuzzy_neighborhood(sa, "x1").get() == meet12, "a: neighborhood of x1", d);
  ok &= expect(fuzzy_neighborhood(sa, "x2").get() == eval_table().image("e1"),
               "a: neighborhood of x2 is F(e1)", d);

  CoveringSpace sm = eval_space(IK::M, beta, {"e2", "e3"});
  ok &= expect(fuzzy_neighborhood(sm, "x1").get() ==
                   set_over(u, {{"0.7", "0.5", "0.2"},
                                {"0.4", "0.4", "0.3", "0.2"},
                                {"0.5", "0.5", "0.3", "0.3"},
                                {"0.5", "0.4"},
                                {"0.6", "0.5", "0.2"}}),
               "m: neighborhood of x1", d);
  ok &= expect(fuzzy_neighborhood(sm, "x2").get() == eval_table().image("e3"),
               "m: neighborhood of x2 is F(e3)", d);

  CoveringSpace ss = eval_space(IK::S, beta, {"e3", "e4"});
  ok &= expect(fuzzy_neighborhood(ss, "x1").get() == eval_table().image("e4"),
               "s: neighborhood of x1 is F(e4)", d);
  ok &= expect(fuzzy_neighborhood(ss, "x2").get() == eval_table().image("e3"),
               "s: neighborhood of x2 is F(e3)", d);

  CoveringSpace st = eval_space(IK::T, beta, {"e4", "e5"});
  FuzzyNeighborhood t1 = fuzzy_neighborhood(st, "x1");
  ok &= expect(!t1.defined() && t1.qualifying.empty(), "t: neighborhood of x1 is Null", d);
  ok &= expect(fuzzy_neighborhood(st, "x2").get() == eval_table().image("e5"),
               "t: neighborhood of x2 is F(e5)", d);

  CoveringSpace sn = eval_space(IK::N, beta, {"e5", "e6"});
  ok &= expect(fuzzy_neighborhood(sn, "x1").get() ==
                   set_over(u, {{"0.6", "0.6"},
                                {"0.6", "0.5", "0.5", "0.4", "0.3"},
                                {"0.7", "0.6"},
                                {"0.7", "0.7", "0.6", "0.5", "0.1"},
                                {"0.7", "0.7", "0.6", "0.6", "0.1"}}),
               "n: neighborhood of x1", d);
  ok &= expect(fuzzy_neighborhood(sn, "x5").get() == eval_table().image("e6"),
               "n: neighborhood of x5 is F(e6)", d);
  return ok;
}

// 3. Crisp neighborhoods of x1 per kind (t-kind: Null at x1, so the
// listed set belongs to x2).
bool run_crisp_neighborhoods(std::string& d) {
  const UniversePtr u = eval_universe();
  const HesitantElement beta = el({"0.5", "0.4", "0.3"});
  bool ok = true;

  ok &= expect(crisp_neighborhood(eval_space(IK::P, beta, {"e1", "e2"}), "x1").get() ==
                   objs(u, {"x1", "x3", "x4", "x5"}),
               "p: crisp neighborhood of x1", d);
  ok &= expect(crisp_neighborhood(eval_space(IK::A, beta, {"e1", "e2"}), "x1").get() ==
                   objs(u, {"x1", "x3"}),
               "a: crisp neighborhood of x1", d);
  ok &= expect(crisp_neighborhood(eval_space(IK::M, beta, {"e2", "e3"}), "x1").get() ==
                   objs(u, {"x1", "x3", "x4", "x5"}),
               "m: crisp neighborhood of x1", d);
  ok &= expect(crisp_neighborhood(eval_space(IK::S, beta, {"e3", "e4"}), "x1").get() ==
                   objs(u, {"x1", "x4", "x5"}),
               "s: crisp neighborhood of x1", d);
  CoveringSpace st = eval_space(IK::T, beta, {"e4", "e5"});
  ok &= expect(!crisp_neighborhood(st, "x1").defined(), "t: crisp neighborhood of x1 is Null",
               d);
  ok &= expect(crisp_neighborhood(st, "x2").get() == objs(u, {"x2", "x4", "x5"}),
               "t: crisp neighborhood of x2", d);
  ok &= expect(crisp_neighborhood(eval_space(IK::N, beta, {"e5", "e6"}), "x1").get() ==
                   objs(u, {"x1", "x3"}),
               "n: crisp neighborhood of x1", d);
  return ok;
}

// 4. Hesitant approximations: the p rows, the 16-element t lower at x1,
// and the claimed coincidence of the n/s/m/a cases with the p case.
bool run_hesitant_approx(std::string& d) {
  const UniversePtr u = eval_universe();
  const HesitantElement beta = el({"0.5", "0.3", "0.2"});
  const HesitantFuzzySet target = set_over(u, {{"0.2", "0.1"},
                                               {"0.2", "0.1"},
                                               {"0.1", "0.1"},
                                               {"0.2", "0.1"},
                                               {"0.2", "0.2"}});
  const HesitantElement lower_row = el({"0.3", "0.3", "0.3", "0.3", "0.2", "0.2"});
  const HesitantElement upper_row = el({"0.2", "0.2", "0.2", "0.2", "0.2"});
  bool ok = true;

  CoveringSpace sp = eval_space(IK::P, beta, {"e6", "e7"});
  HesitantFuzzySet p_lower = hesitant_lower(sp, target);
  HesitantFuzzySet p_upper = hesitant_upper(sp, target);
  for (std::size_t i = 0; i < u->size(); ++i) {
    ok &= expect(p_lower.at(i) == lower_row, "p: lower row at " + u->name(i), d);
    ok &= expect(p_upper.at(i) == upper_row, "p: upper row at " + u->name(i), d);
  }

  CoveringSpace stc = eval_space(IK::T, beta, {"e6", "e8"});
  HesitantElement t_lower_x1 =
      el({"0.5", "0.5", "0.5", "0.5", "0.5", "0.5", "0.5", "0.4", "0.4", "0.4",
          "0.3", "0.3", "0.3", "0.3", "0.3", "0.2"});
  ok &= expect(hesitant_lower(stc, target).at("x1") == t_lower_x1,
               "t: 16-element lower multiset at x1", d);

  for (IK k : {IK::N, IK::S, IK::M, IK::A}) {
    CoveringSpace sk = eval_space(k, beta, {"e6", "e7"});
    HesitantFuzzySet lo = hesitant_lower(sk, target);
    HesitantFuzzySet up = hesitant_upper(sk, target);
    for (std::size_t i = 0; i < u->size(); ++i) {
      ok &= expect(lo.at(i) == p_lower.at(i),
                   std::string(1, kind_letter(k)) + ": lower coincides with p at " +
                       u->name(i) + " (got " + lo.at(i).str() + ", want " +
                       p_lower.at(i).str() + ")",
                   d);
      ok &= expect(up.at(i) == p_upper.at(i),
                   std::string(1, kind_letter(k)) + ": upper coincides with p at " +
                       u->name(i) + " (got " + up.at(i).str() + ", want " +
                       p_upper.at(i).str() + ")",
                   d);
    }
  }
  return ok;
}

// 5. Crisp approximations: (empty, U) for p, ({x1}, U) for a as printed,
// the m and s sandwich violations, and (empty, U) for t and n.
bool run_crisp_approx(std::string& d) {
  const UniversePtr u = eval_universe();
  const HesitantElement beta = el({"0.5", "0.4", "0.3"});
  const ObjectSet everything = obj_universe(*u);
  bool ok = true;

  CoveringSpace sp = eval_space(IK::P, beta, {"e1", "e2"});
  ObjectSet x12 = objs(u, {"x1", "x2"});
  ok &= expect(crisp_lower(sp, x12) == ObjectSet{}, "p: lower of {x1,x2} is empty", d);
  ok &= expect(crisp_upper(sp, x12) == everything, "p: upper of {x1,x2} is U", d);

  CoveringSpace sa = eval_space(IK::A, beta, {"e1", "e2"});
  ObjectSet a_lower = crisp_lower(sa, x12);
  ok &= expect(a_lower == objs(u, {"x1"}),
               "a: lower of {x1,x2} is {x1} (got " + obj_str(*u, a_lower) + ")", d);
  ok &= expect(crisp_upper(sa, x12) == everything, "a: upper of {x1,x2} is U", d);

  CoveringSpace sm = eval_space(IK::M, beta, {"e3", "e4"});
  std::size_t x3 = u->index_of_checked("x3");
  ok &= expect(obj_contains(crisp_lower(sm, objs(u, {"x1", "x2", "x4", "x5"})), x3),
               "m: x3 lies in the lower approximation of a set it is not in", d);
  ok &= expect(!obj_contains(crisp_upper(sm, objs(u, {"x3"})), x3),
               "m: x3 misses the upper approximation of {x3}", d);

  CoveringSpace ss = eval_space(IK::S, beta, {"e4", "e9"});
  std::size_t x5 = u->index_of_checked("x5");
  ok &= expect(obj_contains(crisp_lower(ss, objs(u, {"x1", "x2", "x3", "x4"})), x5),
               "s: x5 lies in the lower approximation of a set it is not in", d);
  ok &= expect(!obj_contains(crisp_upper(ss, objs(u, {"x5"})), x5),
               "s: x5 misses the upper approximation of {x5}", d);

  CoveringSpace st = eval_space(IK::T, beta, {"e6", "e8"});
  ok &= expect(crisp_lower(st, x12) == ObjectSet{}, "t: lower of {x1,x2} is empty", d);
  ok &= expect(crisp_upper(st, x12) == everything, "t: upper of {x1,x2} is U", d);

  CoveringSpace sn = eval_space(IK::N, beta, {"e6", "e7"});
  ok &= expect(crisp_lower(sn, x12) == ObjectSet{}, "n: lower of {x1,x2} is empty", d);
  ok &= expect(crisp_upper(sn, x12) == everything, "n: upper of {x1,x2} is U", d);
  return ok;
}

// 6. The full law registry at 1000 cases per law, seed 1.
bool run_law_suite(std::string& d) {
  laws::LawReport rep = laws::run_laws(laws::law_registry(), 1, 1000, laws::GenBounds{});
  if (rep.all_passed()) {
    d += "    " + std::to_string(rep.results.size()) + " laws x 1000 cases\n";
    return true;
  }
  for (const laws::LawResult& r : rep.results) {
    if (r.passed()) continue;
    d += "    fail: " + r.id + "\n";
    for (const laws::CaseFailure& f : r.failures)
      d += "      case " + std::to_string(f.case_index) + ": " + f.description + "\n";
  }
  return false;
}

// 7. The four strictness witnesses registered as STRICT_WITNESS laws.
bool run_witnesses(std::string& d) {
  std::vector<laws::Law> witnesses;
  for (const laws::Law& l : laws::law_registry())
    if (l.expected == laws::Expect::STRICT_WITNESS) witnesses.push_back(l);
  bool ok = expect(witnesses.size() == 4,
                   "exactly four witnesses registered, found " +
                       std::to_string(witnesses.size()),
                   d);
  laws::LawReport rep = laws::run_laws(witnesses, 1, 1, laws::GenBounds{});
  for (const laws::LawResult& r : rep.results) {
    ok &= expect(r.passed(), r.id, d);
    for (const laws::CaseFailure& f : r.failures) d += "      " + f.description + "\n";
  }
  return ok;
}

// 8. Exact duality on 1000 random (space, target) pairs per kind, both
// hesitant and crisp.
bool run_duality(std::string& d) {
  const laws::GenBounds b{};
  bool ok = true;
  for (IK k : kAllKinds) {
    laws::Rng rng(0x9E3779B97F4A7C15ull ^
                  static_cast<std::uint64_t>(kind_letter(k)));
    for (int i = 0; i < 1000; ++i) {
      CoveringSpace s = laws::gen::defined_space(rng, b, k);
      const UniversePtr& u = s.universe();

      HesitantFuzzySet x = laws::gen::hfs(rng, b, u);
      bool lower_dual =
          hesitant_lower(s, hfs_complement(x)) == hfs_complement(hesitant_upper(s, x));
      bool upper_dual =
          hesitant_upper(s, hfs_complement(x)) == hfs_complement(hesitant_lower(s, x));

      ObjectSet cx = laws::gen::object_set(rng, *u);
      ObjectSet co = obj_complement(*u, cx);
      bool crisp_lower_dual = crisp_lower(s, co) == obj_complement(*u, crisp_upper(s, cx));
      bool crisp_upper_dual = crisp_upper(s, co) == obj_complement(*u, crisp_lower(s, cx));

      if (!(lower_dual && upper_dual && crisp_lower_dual && crisp_upper_dual)) {
        ok &= expect(false,
                     std::string("duality under ") + kind_letter(k) + " case " +
                         std::to_string(i) + " on " + laws::gen::space_str(s),
                     d);
        break;
      }
    }
  }
  return ok;
}

// 9. Byte-identical reports across repeated runs.
bool run_determinism(std::string& d) {
  bool ok = true;
  for (const char* fmt : {"text", "json"}) {
    io::CommonOpts opts{fmt, 4};
    io::CmdResult law1 = io::cmd_laws(1, 100, opts);
    io::CmdResult law2 = io::cmd_laws(1, 100, opts);
    ok &= expect(law1.code == 0 && law2.code == 0,
                 std::string("law runs succeed (") + fmt + ")", d);
    ok &= expect(law1.out == law2.out,
                 std::string("law reports byte-identical (") + fmt + ")", d);
    io::CmdResult rep1 = io::cmd_repro(opts);
    io::CmdResult rep2 = io::cmd_repro(opts);
    ok &= expect(rep1.code == 0 && rep2.code == 0,
                 std::string("replay runs succeed (") + fmt + ")", d);
    ok &= expect(rep1.out == rep2.out,
                 std::string("replay reports byte-identical (") + fmt + ")", d);
  }
  return ok;
}

struct Criterion {
  int number;
  const char* summary;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "soft-set algebra tables exact", 1.0, run_table_algebra},
      {2, "six validations and fuzzy neighborhoods exact", 1.0, run_fuzzy_neighborhoods},
      {3, "crisp neighborhoods exact", 1.0, run_crisp_neighborhoods},
      {4, "hesitant approximations exact", 1.0, run_hesitant_approx},
      {5, "crisp approximations exact", 1.0, run_crisp_approx},
      {6, "law suite, 1000 cases per law", 60.0, run_law_suite},
      {7, "strictness witnesses", 1.0, run_witnesses},
      {8, "duality on 1000 random pairs per kind", 60.0, run_duality},
      {9, "byte-identical reports", 60.0, run_determinism},
  };
  return cs;
}

bool run_criterion(const Criterion& c) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = c.run(detail);
  } catch (const std::exception& e) {
    detail += std::string("    unexpected exception: ") + e.what() + "\n";
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= c.budget_seconds) {
    detail += "    over budget: " + std::to_string(elapsed) + " s of " +
              std::to_string(c.budget_seconds) + " s\n";
    ok = false;
  }
  std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.number,
              c.summary, elapsed);
  if (!ok && !detail.empty()) std::fputs(detail.c_str(), stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1..9]\n", argv[0]);
    return 2;
  }
  bool all = true;
  if (argc == 2) {
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 9) {
      std::fprintf(stderr, "usage: %s [criterion 1..9]\n", argv[0]);
      return 2;
    }
    all = run_criterion(criteria()[static_cast<std::size_t>(n - 1)]);
  } else {
    for (const Criterion& c : criteria()) all = run_criterion(c) && all;
  }
  return all ? 0 : 1;
}
