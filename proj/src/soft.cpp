#include "hfs/soft.hpp"

#include <algorithm>
#include <unordered_set>

namespace hfs {

ParameterSet::ParameterSet(std::vector<std::string> params) : params_(std::move(params)) {
  if (params_.empty()) throw HfsError("parameter set must not be empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& p : params_)
    if (!seen.insert(p).second)
      throw HfsError("duplicate parameter: " + p);
}

bool ParameterSet::contains(std::string_view param) const {
  return index_of(param).has_value();
}

std::optional<std::size_t> ParameterSet::index_of(std::string_view param) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == param) return i;
  return std::nullopt;
}

std::vector<std::string> param_intersect(const ParameterSet& a, const ParameterSet& b) {
  std::vector<std::string> out;
  for (const auto& p : a.params())
    if (b.contains(p)) out.push_back(p);
  return out;
}

std::vector<std::string> param_minus(const ParameterSet& a, const ParameterSet& b) {
  std::vector<std::string> out;
  for (const auto& p : a.params())
    if (!b.contains(p)) out.push_back(p);
  return out;
}

std::vector<std::string> param_union(const ParameterSet& a, const ParameterSet& b) {
  std::vector<std::string> out = a.params();
  for (const auto& p : b.params())
    if (!a.contains(p)) out.push_back(p);
  return out;
}

bool param_subset(const ParameterSet& a, const ParameterSet& b) {
  for (const auto& p : a.params())
    if (!b.contains(p)) return false;
  return true;
}

HesitantFuzzySoftSet::HesitantFuzzySoftSet(UniversePtr universe, ParameterSet params,
                                           std::vector<HesitantFuzzySet> images)
    : universe_(std::move(universe)),
      params_(std::move(params)),
      images_(std::move(images)) {
  if (images_.size() != params_.size())
    throw HfsError("soft set must map every parameter to exactly one set");
  for (const auto& img : images_)
    if (!same_universe(img.universe(), universe_)) throw UniverseMismatch();
}

const HesitantFuzzySet& HesitantFuzzySoftSet::image(std::string_view param) const {
  if (auto i = params_.index_of(param)) return images_[*i];
  throw HfsError("parameter not in soft set: " + std::string(param));
}

namespace {

void require_same_universe(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g) {
  if (!same_universe(f.universe(), g.universe())) throw UniverseMismatch();
}

template <typename F>
HesitantFuzzySoftSet restricted(const HesitantFuzzySoftSet& f,
                                const HesitantFuzzySoftSet& g, F op) {
  require_same_universe(f, g);
  std::vector<std::string> common = param_intersect(f.params(), g.params());
  if (common.empty()) throw EmptyParameterIntersection();
  std::vector<HesitantFuzzySet> images;
  images.reserve(common.size());
  for (const auto& e : common) images.push_back(op(f.image(e), g.image(e)));
  return HesitantFuzzySoftSet(f.universe(), ParameterSet(common), std::move(images));
}

}  // namespace

HesitantFuzzySoftSet soft_restricted_intersect(const HesitantFuzzySoftSet& f,
                                               const HesitantFuzzySoftSet& g) {
  return restricted(f, g, [](const auto& a, const auto& b) { return hfs_intersect(a, b); });
}

HesitantFuzzySoftSet soft_restricted_union(const HesitantFuzzySoftSet& f,
                                           const HesitantFuzzySoftSet& g) {
  return restricted(f, g, [](const auto& a, const auto& b) { return hfs_union(a, b); });
}

HesitantFuzzySoftSet soft_extended_union(const HesitantFuzzySoftSet& f,
                                         const HesitantFuzzySoftSet& g) {
  require_same_universe(f, g);
  std::vector<std::string> all = param_union(f.params(), g.params());
  std::vector<HesitantFuzzySet> images;
  images.reserve(all.size());
  for (const auto& e : all) {
    bool in_f = f.params().contains(e);
    bool in_g = g.params().contains(e);
    if (in_f && in_g) {
      images.push_back(hfs_union(f.image(e), g.image(e)));
    } else if (in_f) {
      images.push_back(f.image(e));
    } else {
      images.push_back(g.image(e));
    }
  }
  return HesitantFuzzySoftSet(f.universe(), ParameterSet(std::move(all)), std::move(images));
}

HesitantFuzzySoftSet soft_complement(const HesitantFuzzySoftSet& f) {
  std::vector<HesitantFuzzySet> images;
  images.reserve(f.params().size());
  for (const auto& img : f.images()) images.push_back(hfs_complement(img));
  return HesitantFuzzySoftSet(f.universe(), f.params(), std::move(images));
}

HesitantFuzzySoftSet soft_restrict(const HesitantFuzzySoftSet& f,
                                   const std::vector<std::string>& params) {
  std::vector<HesitantFuzzySet> images;
  images.reserve(params.size());
  for (const auto& e : params) images.push_back(f.image(e));
  return HesitantFuzzySoftSet(f.universe(), ParameterSet(params), std::move(images));
}

namespace {

template <typename F>
ProductTable product(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g, F op) {
  require_same_universe(f, g);
  ProductTable t;
  t.universe = f.universe();
  t.rows = f.params().params();
  t.cols = g.params().params();
  t.cells.reserve(t.rows.size() * t.cols.size());
  for (const auto& img_f : f.images())
    for (const auto& img_g : g.images())
      t.cells.push_back(op(img_f, img_g));
  return t;
}

}  // namespace

ProductTable soft_wedge(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g) {
  return product(f, g, [](const auto& a, const auto& b) { return hfs_intersect(a, b); });
}

ProductTable soft_vee(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g) {
  return product(f, g, [](const auto& a, const auto& b) { return hfs_union(a, b); });
}

ProductTable product_complement(const ProductTable& t) {
  ProductTable out;
  out.universe = t.universe;
  out.rows = t.rows;
  out.cols = t.cols;
  out.cells.reserve(t.cells.size());
  for (const auto& cell : t.cells) out.cells.push_back(hfs_complement(cell));
  return out;
}

bool product_equal(const ProductTable& a, const ProductTable& b) {
  return a.rows == b.rows && a.cols == b.cols && a.cells == b.cells;
}

bool soft_includes(InclusionKind kind, const HesitantFuzzySoftSet& f,
                   const HesitantFuzzySoftSet& g) {
  require_same_universe(f, g);
  if (!param_subset(f.params(), g.params())) return false;
  for (const auto& e : f.params().params())
    if (!hfs_includes(kind, f.image(e), g.image(e))) return false;
  return true;
}

bool soft_equiv(InclusionKind kind, const HesitantFuzzySoftSet& f,
                const HesitantFuzzySoftSet& g) {
  return soft_includes(kind, f, g) && soft_includes(kind, g, f);
}

HesitantFuzzySet ones_of(const HesitantFuzzySoftSet& f) {
  std::vector<HesitantElement> values;
  values.reserve(f.universe()->size());
  for (std::size_t x = 0; x < f.universe()->size(); ++x) {
    std::size_t len = f.image(std::size_t{0}).at(x).size();
    for (const auto& img : f.images()) len = std::min(len, img.at(x).size());
    values.emplace_back(std::vector<Degree>(len, kOne));
  }
  return HesitantFuzzySet(f.universe(), std::move(values));
}

bool is_covering(const HesitantFuzzySoftSet& f) {
  HesitantFuzzySet ones = ones_of(f);
  HesitantFuzzySet all = family_union(f.images());
  for (std::size_t x = 0; x < f.universe()->size(); ++x)
    if (!elem_includes_sot(ones.at(x), all.at(x))) return false;
  return true;
}

bool beta_covers(const HesitantFuzzySoftSet& f, const HesitantElement& beta,
                 InclusionKind kind) {
  HesitantFuzzySet all = family_union(f.images());
  return threshold_below_all(beta, kind, all);
}

CoveringSpace::CoveringSpace(HesitantFuzzySoftSet soft, HesitantElement beta,
                             InclusionKind kind)
    : soft_(std::move(soft)), beta_(std::move(beta)), kind_(kind) {
  HesitantFuzzySet all = family_union(soft_.images());
  for (std::size_t x = 0; x < soft_.universe()->size(); ++x)
    if (!elem_includes(kind_, beta_, all.at(x)))
      throw NotABetaCovering(soft_.universe()->name(x));
}

}  // namespace hfs
