#include "hfs/approx.hpp"

namespace hfs {

namespace {

void require_target(const CoveringSpace& space, const HesitantFuzzySet& x) {
  if (!same_universe(space.universe(), x.universe())) throw UniverseMismatch();
}

// All neighborhoods, failing loudly at the first Null one.
std::vector<HesitantFuzzySet> neighborhoods_or_throw(const CoveringSpace& space) {
  std::vector<HesitantFuzzySet> out;
  out.reserve(space.universe()->size());
  for (std::size_t x = 0; x < space.universe()->size(); ++x) {
    FuzzyNeighborhood n = fuzzy_neighborhood(space, x);
    if (!n.defined()) throw UndefinedNeighborhood(space.universe()->name(x));
    out.push_back(n.get());
  }
  return out;
}

}  // namespace

HesitantFuzzySet hesitant_lower(const CoveringSpace& space, const HesitantFuzzySet& x) {
  require_target(space, x);
  std::vector<HesitantFuzzySet> nbhd = neighborhoods_or_throw(space);
  std::vector<HesitantElement> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    HesitantFuzzySet nc = hfs_complement(nbhd[i]);
    std::optional<HesitantElement> acc;
    for (std::size_t y = 0; y < x.size(); ++y) {
      HesitantElement term = elem_union(nc.at(y), x.at(y));
      acc = acc ? elem_intersect(*acc, term) : term;
    }
    out.push_back(std::move(*acc));
  }
  return HesitantFuzzySet(x.universe(), std::move(out));
}

HesitantFuzzySet hesitant_upper(const CoveringSpace& space, const HesitantFuzzySet& x) {
  require_target(space, x);
  std::vector<HesitantFuzzySet> nbhd = neighborhoods_or_throw(space);
  std::vector<HesitantElement> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::optional<HesitantElement> acc;
    for (std::size_t y = 0; y < x.size(); ++y) {
      HesitantElement term = elem_intersect(nbhd[i].at(y), x.at(y));
      acc = acc ? elem_union(*acc, term) : term;
    }
    out.push_back(std::move(*acc));
  }
  return HesitantFuzzySet(x.universe(), std::move(out));
}

namespace {

std::vector<ObjectSet> crisp_table_or_throw(const CoveringSpace& space) {
  std::vector<ObjectSet> out;
  out.reserve(space.universe()->size());
  for (std::size_t x = 0; x < space.universe()->size(); ++x) {
    CrispNeighborhood n = crisp_neighborhood(space, x);
    if (!n.defined()) throw UndefinedNeighborhood(space.universe()->name(x));
    out.push_back(n.get());
  }
  return out;
}

}  // namespace

ObjectSet crisp_lower(const CoveringSpace& space, const ObjectSet& x) {
  std::vector<ObjectSet> nbhd = crisp_table_or_throw(space);
  ObjectSet out;
  for (std::size_t i = 0; i < nbhd.size(); ++i)
    if (obj_subset(nbhd[i], x)) out.push_back(i);
  return out;
}

ObjectSet crisp_upper(const CoveringSpace& space, const ObjectSet& x) {
  std::vector<ObjectSet> nbhd = crisp_table_or_throw(space);
  ObjectSet out;
  for (std::size_t i = 0; i < nbhd.size(); ++i)
    if (!obj_intersect(nbhd[i], x).empty()) out.push_back(i);
  return out;
}

ApproxReport approx_report(const CoveringSpace& space,
                           const std::optional<HesitantFuzzySet>& hesitant_target,
                           const std::optional<ObjectSet>& crisp_target) {
  ApproxReport report{space.kind(), space.beta(), space.soft().params().params(),
                      std::nullopt, std::nullopt};
  if (hesitant_target) {
    report.hesitant = ApproximationPair{hesitant_lower(space, *hesitant_target),
                                        hesitant_upper(space, *hesitant_target)};
  }
  if (crisp_target) {
    report.crisp = CrispApproximationPair{crisp_lower(space, *crisp_target),
                                          crisp_upper(space, *crisp_target)};
  }
  return report;
}

}  // namespace hfs
