#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfs/soft.hpp"

namespace hfs {

// The fuzzy neighborhood of an object: the intersection of all parameter
// images that dominate beta at that object.  When no parameter qualifies
// the neighborhood is undefined ("Null") — a first-class state, never an
// empty set.
struct FuzzyNeighborhood {
  std::optional<HesitantFuzzySet> value;
  std::vector<std::string> qualifying;  // parameters that dominated beta at x

  bool defined() const { return value.has_value(); }
  const HesitantFuzzySet& get() const { return *value; }
};

// The crisp neighborhood: the objects y where beta is dominated by the
// fuzzy neighborhood's value at y.  Undefined exactly when the fuzzy
// neighborhood is.
struct CrispNeighborhood {
  std::optional<ObjectSet> members;

  bool defined() const { return members.has_value(); }
  const ObjectSet& get() const { return *members; }
};

FuzzyNeighborhood fuzzy_neighborhood(const CoveringSpace& space, std::string_view x);
FuzzyNeighborhood fuzzy_neighborhood(const CoveringSpace& space, std::size_t x);

CrispNeighborhood crisp_neighborhood(const CoveringSpace& space, std::string_view x);
CrispNeighborhood crisp_neighborhood(const CoveringSpace& space, std::size_t x);

// The set {z : beta c_kind H(z)} for an arbitrary hesitant fuzzy set H.
// This is the crisp operator applied to a raw set rather than to a
// neighborhood; the fold laws need it separately.
ObjectSet beta_cut(const HesitantElement& beta, InclusionKind kind,
                   const HesitantFuzzySet& h);

struct NeighborhoodRow {
  std::size_t object;
  FuzzyNeighborhood fuzzy;
  CrispNeighborhood crisp;
};

// Both operators evaluated for every object, in universe order.
std::vector<NeighborhoodRow> neighborhood_table(const CoveringSpace& space);

// True when fuzzy_neighborhood is defined at every object.
bool all_defined(const CoveringSpace& space);

}  // namespace hfs
