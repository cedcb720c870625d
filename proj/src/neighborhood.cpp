#include "hfs/neighborhood.hpp"

namespace hfs {

FuzzyNeighborhood fuzzy_neighborhood(const CoveringSpace& space, std::size_t x) {
  const auto& soft = space.soft();
  FuzzyNeighborhood out;
  HfsFamily qualifying;
  for (std::size_t i = 0; i < soft.params().size(); ++i) {
    const HesitantFuzzySet& img = soft.image(i);
    if (elem_includes(space.kind(), space.beta(), img.at(x))) {
      qualifying.push_back(img);
      out.qualifying.push_back(soft.params().name(i));
    }
  }
  if (!qualifying.empty()) out.value = family_intersect(qualifying);
  return out;
}

FuzzyNeighborhood fuzzy_neighborhood(const CoveringSpace& space, std::string_view x) {
  return fuzzy_neighborhood(space, space.universe()->index_of_checked(x));
}

CrispNeighborhood crisp_neighborhood(const CoveringSpace& space, std::size_t x) {
  FuzzyNeighborhood fuzzy = fuzzy_neighborhood(space, x);
  CrispNeighborhood out;
  if (fuzzy.defined())
    out.members = beta_cut(space.beta(), space.kind(), fuzzy.get());
  return out;
}

CrispNeighborhood crisp_neighborhood(const CoveringSpace& space, std::string_view x) {
  return crisp_neighborhood(space, space.universe()->index_of_checked(x));
}

ObjectSet beta_cut(const HesitantElement& beta, InclusionKind kind,
                   const HesitantFuzzySet& h) {
  ObjectSet out;
  for (std::size_t z = 0; z < h.size(); ++z)
    if (elem_includes(kind, beta, h.at(z))) out.push_back(z);
  return out;
}

std::vector<NeighborhoodRow> neighborhood_table(const CoveringSpace& space) {
  std::vector<NeighborhoodRow> rows;
  rows.reserve(space.universe()->size());
  for (std::size_t x = 0; x < space.universe()->size(); ++x) {
    NeighborhoodRow row;
    row.object = x;
    row.fuzzy = fuzzy_neighborhood(space, x);
    if (row.fuzzy.defined()) {
      row.crisp.members = beta_cut(space.beta(), space.kind(), row.fuzzy.get());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool all_defined(const CoveringSpace& space) {
  for (std::size_t x = 0; x < space.universe()->size(); ++x)
    if (!fuzzy_neighborhood(space, x).defined()) return false;
  return true;
}

}  // namespace hfs
