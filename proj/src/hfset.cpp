#include "hfs/hfset.hpp"

#include <algorithm>
#include <unordered_set>

namespace hfs {

Universe::Universe(std::vector<std::string> objects) : objects_(std::move(objects)) {
  if (objects_.empty()) throw HfsError("universe must not be empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& o : objects_)
    if (!seen.insert(o).second)
      throw HfsError("duplicate object in universe: " + o);
}

std::optional<std::size_t> Universe::index_of(std::string_view object) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == object) return i;
  return std::nullopt;
}

std::size_t Universe::index_of_checked(std::string_view object) const {
  if (auto i = index_of(object)) return *i;
  throw ObjectNotInUniverse(std::string(object));
}

UniversePtr make_universe(std::vector<std::string> objects) {
  return std::make_shared<const Universe>(std::move(objects));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

HesitantFuzzySet::HesitantFuzzySet(UniversePtr universe,
                                   std::vector<HesitantElement> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (!universe_ || values_.size() != universe_->size())
    throw HfsError("hesitant fuzzy set must assign exactly one element per object");
}

const HesitantElement& HesitantFuzzySet::at(std::string_view object) const {
  return values_[universe_->index_of_checked(object)];
}

namespace {

void require_same_universe(const HesitantFuzzySet& a, const HesitantFuzzySet& b) {
  if (!same_universe(a.universe(), b.universe())) throw UniverseMismatch();
}

template <typename F>
HesitantFuzzySet pointwise(const HesitantFuzzySet& a, const HesitantFuzzySet& b, F op) {
  require_same_universe(a, b);
  std::vector<HesitantElement> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(op(a.at(i), b.at(i)));
  return HesitantFuzzySet(a.universe(), std::move(out));
}

}  // namespace

HesitantFuzzySet hfs_union(const HesitantFuzzySet& a, const HesitantFuzzySet& b) {
  return pointwise(a, b, [](const auto& x, const auto& y) { return elem_union(x, y); });
}

HesitantFuzzySet hfs_intersect(const HesitantFuzzySet& a, const HesitantFuzzySet& b) {
  return pointwise(a, b, [](const auto& x, const auto& y) { return elem_intersect(x, y); });
}

HesitantFuzzySet hfs_complement(const HesitantFuzzySet& a) {
  std::vector<HesitantElement> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.at(i).complement());
  return HesitantFuzzySet(a.universe(), std::move(out));
}

bool hfs_includes(InclusionKind kind, const HesitantFuzzySet& a,
                  const HesitantFuzzySet& b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!elem_includes(kind, a.at(i), b.at(i))) return false;
  return true;
}

bool hfs_equiv(InclusionKind kind, const HesitantFuzzySet& a,
               const HesitantFuzzySet& b) {
  return hfs_includes(kind, a, b) && hfs_includes(kind, b, a);
}

bool threshold_below_all(const HesitantElement& beta, InclusionKind kind,
                         const HesitantFuzzySet& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!elem_includes(kind, beta, h.at(i))) return false;
  return true;
}

bool threshold_below_some(const HesitantElement& beta, InclusionKind kind,
                          const HesitantFuzzySet& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (elem_includes(kind, beta, h.at(i))) return true;
  return false;
}

namespace {

template <typename F>
HesitantFuzzySet fold(const HfsFamily& family, F op) {
  if (family.empty()) throw EmptyFamily();
  HesitantFuzzySet acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = op(acc, family[i]);
  return acc;
}

HesitantFuzzySet constant_set(const UniversePtr& universe, Degree d) {
  std::vector<HesitantElement> values(
      universe->size(), HesitantElement(std::vector<Degree>{d}));
  return HesitantFuzzySet(universe, std::move(values));
}

}  // namespace

HesitantFuzzySet family_intersect(const HfsFamily& family) {
  return fold(family, [](const auto& x, const auto& y) { return hfs_intersect(x, y); });
}

HesitantFuzzySet family_union(const HfsFamily& family) {
  return fold(family, [](const auto& x, const auto& y) { return hfs_union(x, y); });
}

HesitantFuzzySet full_set(const UniversePtr& universe) {
  return constant_set(universe, kOne);
}

HesitantFuzzySet empty_set(const UniversePtr& universe) {
  return constant_set(universe, kZero);
}

HesitantFuzzySet partial_full_set(const UniversePtr& universe) {
  return constant_set(universe, kOne);
}

ObjectSet obj_universe(const Universe& u) {
  ObjectSet out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = i;
  return out;
}

ObjectSet obj_union(const ObjectSet& a, const ObjectSet& b) {
  ObjectSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ObjectSet obj_intersect(const ObjectSet& a, const ObjectSet& b) {
  ObjectSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ObjectSet obj_complement(const Universe& u, const ObjectSet& a) {
  ObjectSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (k < a.size() && a[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

bool obj_subset(const ObjectSet& a, const ObjectSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool obj_contains(const ObjectSet& a, std::size_t i) {
  return std::binary_search(a.begin(), a.end(), i);
}

std::vector<std::string> obj_names(const Universe& u, const ObjectSet& a) {
  std::vector<std::string> out;
  out.reserve(a.size());
  for (std::size_t i : a) out.push_back(u.name(i));
  return out;
}

std::string obj_str(const Universe& u, const ObjectSet& a) {
  std::string out = "{";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) out += ",";
    out += u.name(a[k]);
  }
  out += "}";
  return out;
}

}  // namespace hfs
