#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hfs/approx.hpp"

namespace hfs::fixtures {

// Shorthand builders used across fixtures and tests.
HesitantElement el(std::initializer_list<std::string_view> degrees);
HesitantFuzzySet set_over(const UniversePtr& u,
                          std::initializer_list<std::initializer_list<std::string_view>> rows);

// --- the two-soft-set dataset (two objects x, y) -----------------------
//
// Two full five-column tables F and G over e1..e5.  The soft-algebra
// regressions slice the operand pairs they need out of these — e.g.
// (F,{e1,e2}) against (G,{e2,e3}) — via soft_restrict.
UniversePtr pair_universe();
HesitantFuzzySoftSet pair_F();
HesitantFuzzySoftSet pair_G();

// --- the evaluation-table dataset (five objects x1..x5) ----------------
//
// Nine columns e1..e9 of expert scores; every neighborhood and
// approximation regression draws its parameter subsets from here.
UniversePtr eval_universe();
const HesitantFuzzySoftSet& eval_table();
// The sub-table over the given parameters.
HesitantFuzzySoftSet eval_slice(const std::vector<std::string>& params);
CoveringSpace eval_space(InclusionKind kind, const HesitantElement& beta,
                         const std::vector<std::string>& params);

// A named regression with embedded expected values.  run() returns true
// on match and otherwise appends a human-readable diff to *diag.
struct Fixture {
  std::string id;
  std::function<bool(std::string* diag)> run;
};

// All regression cases: the soft-set algebra table, the six space
// validations, the fuzzy and crisp neighborhood tables, the hesitant and
// crisp approximations, and the strictness witnesses.
const std::vector<Fixture>& paper_fixtures();

// Runs the fixtures whose ids start with the given prefix (all when
// empty); returns the failing ids, with diagnostics appended to *diag.
std::vector<std::string> run_fixtures(std::string_view id_prefix, std::string* diag);

}  // namespace hfs::fixtures
