#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfs/element.hpp"
#include "hfs/errors.hpp"

namespace hfs {

// A finite, ordered universe of distinct object identifiers.  Order is
// significant: folds, reports and serializations follow it.
class Universe {
 public:
  explicit Universe(std::vector<std::string> objects);

  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  const std::string& name(std::size_t i) const { return objects_[i]; }

  std::optional<std::size_t> index_of(std::string_view object) const;
  // As above but throws ObjectNotInUniverse.
  std::size_t index_of_checked(std::string_view object) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.objects_ == b.objects_;
  }

 private:
  std::vector<std::string> objects_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> objects);

// True when the two handles denote the same universe (by content).
bool same_universe(const UniversePtr& a, const UniversePtr& b);

// A total map from the universe to hesitant elements, stored by object
// index.
class HesitantFuzzySet {
 public:
  HesitantFuzzySet(UniversePtr universe, std::vector<HesitantElement> values);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }

  const HesitantElement& at(std::size_t i) const { return values_[i]; }
  const HesitantElement& at(std::string_view object) const;

  const std::vector<HesitantElement>& values() const { return values_; }

  friend bool operator==(const HesitantFuzzySet& a, const HesitantFuzzySet& b) {
    return *a.universe_ == *b.universe_ && a.values_ == b.values_;
  }

 private:
  UniversePtr universe_;
  std::vector<HesitantElement> values_;
};

HesitantFuzzySet hfs_union(const HesitantFuzzySet& a, const HesitantFuzzySet& b);
HesitantFuzzySet hfs_intersect(const HesitantFuzzySet& a, const HesitantFuzzySet& b);
HesitantFuzzySet hfs_complement(const HesitantFuzzySet& a);

// a c_kind b at every object.
bool hfs_includes(InclusionKind kind, const HesitantFuzzySet& a,
                  const HesitantFuzzySet& b);
// Mutual inclusion, the paper-style =_k.
bool hfs_equiv(InclusionKind kind, const HesitantFuzzySet& a,
               const HesitantFuzzySet& b);

// beta c_kind H(x) at every object / at some object.
bool threshold_below_all(const HesitantElement& beta, InclusionKind kind,
                         const HesitantFuzzySet& h);
bool threshold_below_some(const HesitantElement& beta, InclusionKind kind,
                          const HesitantFuzzySet& h);

using HfsFamily = std::vector<HesitantFuzzySet>;

// Folds over a non-empty family (order-independent up to multiset
// equality; evaluated left to right).
HesitantFuzzySet family_intersect(const HfsFamily& family);
HesitantFuzzySet family_union(const HfsFamily& family);

// Distinguished constants, one canonical representative each:
// full_set:         every value {1}   (all lower bounds are 1)
// empty_set:        every value {0}   (all upper bounds are 0)
// partial_full_set: every value {1}   (all upper bounds are 1)
HesitantFuzzySet full_set(const UniversePtr& universe);
HesitantFuzzySet empty_set(const UniversePtr& universe);
HesitantFuzzySet partial_full_set(const UniversePtr& universe);

// --- crisp object sets -------------------------------------------------
//
// A subset of the universe, stored as a sorted vector of object indices.

using ObjectSet = std::vector<std::size_t>;

ObjectSet obj_universe(const Universe& u);  // {0,..,n-1}
ObjectSet obj_union(const ObjectSet& a, const ObjectSet& b);
ObjectSet obj_intersect(const ObjectSet& a, const ObjectSet& b);
ObjectSet obj_complement(const Universe& u, const ObjectSet& a);
bool obj_subset(const ObjectSet& a, const ObjectSet& b);
bool obj_contains(const ObjectSet& a, std::size_t i);

std::vector<std::string> obj_names(const Universe& u, const ObjectSet& a);
std::string obj_str(const Universe& u, const ObjectSet& a);  // "{x1,x3}"

}  // namespace hfs
