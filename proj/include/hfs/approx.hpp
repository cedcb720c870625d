#pragma once

#include <optional>
#include <string>

#include "hfs/neighborhood.hpp"

namespace hfs {

// Rough approximations of a hesitant fuzzy target X over a covering
// space.  At each object x, with N = fuzzy neighborhood of x:
//   lower(X)(x) = intersection over y of (N^c(y) union X(y))
//   upper(X)(x) = union        over y of (N(y) intersect X(y))
// Folds run in universe order.  Both throw UndefinedNeighborhood(x) when
// some object has a Null neighborhood.
HesitantFuzzySet hesitant_lower(const CoveringSpace& space, const HesitantFuzzySet& x);
HesitantFuzzySet hesitant_upper(const CoveringSpace& space, const HesitantFuzzySet& x);

// Crisp approximations of an object set X:
//   lower(X) = {x : crisp neighborhood of x is a subset of X}
//   upper(X) = {x : crisp neighborhood of x meets X}
ObjectSet crisp_lower(const CoveringSpace& space, const ObjectSet& x);
ObjectSet crisp_upper(const CoveringSpace& space, const ObjectSet& x);

struct ApproximationPair {
  HesitantFuzzySet lower;
  HesitantFuzzySet upper;
};

struct CrispApproximationPair {
  ObjectSet lower;
  ObjectSet upper;
};

// Bundle of all requested approximations for one space, plus the inputs
// that produced them (kind, beta, parameters) for self-describing reports.
struct ApproxReport {
  InclusionKind kind;
  HesitantElement beta;
  std::vector<std::string> params;
  std::optional<ApproximationPair> hesitant;
  std::optional<CrispApproximationPair> crisp;
};

ApproxReport approx_report(const CoveringSpace& space,
                           const std::optional<HesitantFuzzySet>& hesitant_target,
                           const std::optional<ObjectSet>& crisp_target);

}  // namespace hfs
