#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfs/hfset.hpp"

namespace hfs {

// A non-empty, ordered set of distinct parameter identifiers.
class ParameterSet {
 public:
  explicit ParameterSet(std::vector<std::string> params);

  const std::vector<std::string>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  const std::string& name(std::size_t i) const { return params_[i]; }

  bool contains(std::string_view param) const;
  std::optional<std::size_t> index_of(std::string_view param) const;

  friend bool operator==(const ParameterSet& a, const ParameterSet& b) {
    return a.params_ == b.params_;
  }

 private:
  std::vector<std::string> params_;
};

// Classical set algebra on parameter identifiers; results keep the order
// of the left operand (then of the right, for the union's new entries).
std::vector<std::string> param_intersect(const ParameterSet& a, const ParameterSet& b);
std::vector<std::string> param_minus(const ParameterSet& a, const ParameterSet& b);
std::vector<std::string> param_union(const ParameterSet& a, const ParameterSet& b);
bool param_subset(const ParameterSet& a, const ParameterSet& b);

// A pair (F, A): one hesitant fuzzy set per parameter, all over one
// universe.
class HesitantFuzzySoftSet {
 public:
  HesitantFuzzySoftSet(UniversePtr universe, ParameterSet params,
                       std::vector<HesitantFuzzySet> images);

  const UniversePtr& universe() const { return universe_; }
  const ParameterSet& params() const { return params_; }

  const HesitantFuzzySet& image(std::size_t i) const { return images_[i]; }
  const HesitantFuzzySet& image(std::string_view param) const;
  const std::vector<HesitantFuzzySet>& images() const { return images_; }

  friend bool operator==(const HesitantFuzzySoftSet& a,
                         const HesitantFuzzySoftSet& b) {
    return *a.universe_ == *b.universe_ && a.params_ == b.params_ &&
           a.images_ == b.images_;
  }

 private:
  UniversePtr universe_;
  ParameterSet params_;
  std::vector<HesitantFuzzySet> images_;
};

// Restricted operations act on the common parameter set A n B (error if
// empty); the extended union acts on A u B with the three-case branch.
HesitantFuzzySoftSet soft_restricted_intersect(const HesitantFuzzySoftSet& f,
                                               const HesitantFuzzySoftSet& g);
HesitantFuzzySoftSet soft_restricted_union(const HesitantFuzzySoftSet& f,
                                           const HesitantFuzzySoftSet& g);
HesitantFuzzySoftSet soft_extended_union(const HesitantFuzzySoftSet& f,
                                         const HesitantFuzzySoftSet& g);
HesitantFuzzySoftSet soft_complement(const HesitantFuzzySoftSet& f);

// The sub-soft-set over the given parameters (each must be present).
HesitantFuzzySoftSet soft_restrict(const HesitantFuzzySoftSet& f,
                                   const std::vector<std::string>& params);

// Result of the wedge/vee products: a |A| x |B| table of hesitant fuzzy
// sets indexed by parameter pairs (e_i, e_j).
struct ProductTable {
  UniversePtr universe;
  std::vector<std::string> rows;  // parameters of the left operand
  std::vector<std::string> cols;  // parameters of the right operand
  std::vector<HesitantFuzzySet> cells;  // row-major

  const HesitantFuzzySet& at(std::size_t i, std::size_t j) const {
    return cells[i * cols.size() + j];
  }
};

ProductTable soft_wedge(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g);
ProductTable soft_vee(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g);
ProductTable product_complement(const ProductTable& t);
bool product_equal(const ProductTable& a, const ProductTable& b);

// (F,A) c_kind (G,B): A is a subset of B and F(e) c_kind G(e) for e in A.
bool soft_includes(InclusionKind kind, const HesitantFuzzySoftSet& f,
                   const HesitantFuzzySoftSet& g);
bool soft_equiv(InclusionKind kind, const HesitantFuzzySoftSet& f,
                const HesitantFuzzySoftSet& g);

// The reference set 1 used by the covering condition: all degrees are 1
// and |1(x)| is the shortest element length among the images at x.
HesitantFuzzySet ones_of(const HesitantFuzzySoftSet& f);

// 1 c_sot (union of all images) at every object.
bool is_covering(const HesitantFuzzySoftSet& f);

// beta c_kind (union of all images)(x) at every object.
bool beta_covers(const HesitantFuzzySoftSet& f, const HesitantElement& beta,
                 InclusionKind kind);

// A validated covering approximation space: the soft set is a
// beta-covering of its universe under the given inclusion kind.
class CoveringSpace {
 public:
  // Throws NotABetaCovering (with the first failing object) otherwise.
  CoveringSpace(HesitantFuzzySoftSet soft, HesitantElement beta, InclusionKind kind);

  const HesitantFuzzySoftSet& soft() const { return soft_; }
  const HesitantElement& beta() const { return beta_; }
  InclusionKind kind() const { return kind_; }
  const UniversePtr& universe() const { return soft_.universe(); }

 private:
  HesitantFuzzySoftSet soft_;
  HesitantElement beta_;
  InclusionKind kind_;
};

}  // namespace hfs
