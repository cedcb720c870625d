// Laws over hesitant fuzzy soft sets: the restricted and extended
// operations, complements, the wedge/vee product tables, and the
// lattice identities that survive at soft-set level.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hfs/laws.hpp"
#include "hfs/soft.hpp"
#include "lawgen.hpp"
#include "laws_build.hpp"

namespace hfs::laws::detail {

namespace {

using IK = InclusionKind;

// Images over parameters e<start>..e<start+count-1>; together with the
// default e1.. prefix naming this exercises disjoint, overlapping and
// nested parameter sets.
HesitantFuzzySoftSet offset_soft(Rng& rng, const GenBounds& b, const UniversePtr& u,
                                 std::size_t start, std::size_t count) {
  std::vector<std::string> names;
  std::vector<HesitantFuzzySet> images;
  names.reserve(count);
  images.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    names.push_back("e" + std::to_string(start + j));
    images.push_back(gen::hfs(rng, b, u));
  }
  return HesitantFuzzySoftSet(u, ParameterSet(std::move(names)), std::move(images));
}

// Equality as maps: same parameter set (order ignored) and identical
// image per parameter name.
bool same_map(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g) {
  if (!param_subset(f.params(), g.params()) || !param_subset(g.params(), f.params()))
    return false;
  for (std::size_t j = 0; j < f.params().size(); ++j)
    if (!(f.image(j) == g.image(f.params().name(j)))) return false;
  return true;
}

Law law(std::string id, std::function<bool(Rng&, const GenBounds&, std::string*)> run) {
  return Law{std::move(id), Expect::HOLDS, std::move(run)};
}

std::string two(const HesitantFuzzySoftSet& f, const HesitantFuzzySoftSet& g) {
  return "F=" + gen::soft_str(f) + " G=" + gen::soft_str(g);
}

}  // namespace

void register_soft_laws(std::vector<Law>& out) {
  out.push_back(law("soft-restricted-commutes",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u), g = gen::soft(rng, b, u);
    bool ok = same_map(soft_restricted_intersect(f, g), soft_restricted_intersect(g, f)) &&
              same_map(soft_restricted_union(f, g), soft_restricted_union(g, f));
    if (!ok && why) *why = two(f, g);
    return ok;
  }));

  out.push_back(law("soft-restricted-assoc", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u), g = gen::soft(rng, b, u),
                         h = gen::soft(rng, b, u);
    bool ok = soft_restricted_intersect(soft_restricted_intersect(f, g), h) ==
                  soft_restricted_intersect(f, soft_restricted_intersect(g, h)) &&
              soft_restricted_union(soft_restricted_union(f, g), h) ==
                  soft_restricted_union(f, soft_restricted_union(g, h));
    if (!ok && why) *why = two(f, g) + " H=" + gen::soft_str(h);
    return ok;
  }));

  out.push_back(law("soft-complement-involutive",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u);
    bool ok = soft_complement(soft_complement(f)) == f;
    if (!ok && why) *why = "F=" + gen::soft_str(f);
    return ok;
  }));

  out.push_back(law("soft-restricted-demorgan",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u), g = gen::soft(rng, b, u);
    bool ok = soft_complement(soft_restricted_union(f, g)) ==
                  soft_restricted_intersect(soft_complement(f), soft_complement(g)) &&
              soft_complement(soft_restricted_intersect(f, g)) ==
                  soft_restricted_union(soft_complement(f), soft_complement(g));
    if (!ok && why) *why = two(f, g);
    return ok;
  }));

  // The extended union keeps left-only images, keeps right-only images,
  // and folds shared parameters with the element union.
  out.push_back(law("soft-extended-union-branches",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u);
    std::size_t start = rng.between(1, f.params().size() + 1);
    HesitantFuzzySoftSet g =
        offset_soft(rng, b, u, start, rng.between(1, b.max_params));
    HesitantFuzzySoftSet ext = soft_extended_union(f, g);
    bool ok = ext.params().params() == param_union(f.params(), g.params());
    for (std::size_t j = 0; ok && j < ext.params().size(); ++j) {
      const std::string& name = ext.params().name(j);
      bool in_f = f.params().contains(name), in_g = g.params().contains(name);
      if (in_f && in_g) {
        ok = ext.image(j) == hfs_union(f.image(name), g.image(name));
      } else if (in_f) {
        ok = ext.image(j) == f.image(name);
      } else {
        ok = ext.image(j) == g.image(name);
      }
    }
    if (!ok && why) *why = two(f, g);
    return ok;
  }));

  out.push_back(law("soft-idempotent-pam", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u);
    bool ok = true;
    for (IK k : {IK::P, IK::A, IK::M})
      ok = ok && soft_equiv(k, soft_restricted_intersect(f, f), f) &&
           soft_equiv(k, soft_restricted_union(f, f), f);
    if (!ok && why) *why = "F=" + gen::soft_str(f);
    return ok;
  }));

  // Absorption shrinks the parameter set to the shared parameters, so
  // the operand is sliced to the result's parameters before comparing.
  out.push_back(law("soft-absorption-pa", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u), g = gen::soft(rng, b, u);
    HesitantFuzzySoftSet lhs1 = soft_restricted_intersect(soft_restricted_union(f, g), f);
    HesitantFuzzySoftSet lhs2 = soft_restricted_union(soft_restricted_intersect(f, g), f);
    HesitantFuzzySoftSet rhs1 = soft_restrict(f, lhs1.params().params());
    HesitantFuzzySoftSet rhs2 = soft_restrict(f, lhs2.params().params());
    bool ok = true;
    for (IK k : {IK::P, IK::A})
      ok = ok && soft_equiv(k, lhs1, rhs1) && soft_equiv(k, lhs2, rhs2);
    if (!ok && why) *why = two(f, g);
    return ok;
  }));

  out.push_back(law("soft-distributive-pa", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u), g = gen::soft(rng, b, u),
                         h = gen::soft(rng, b, u);
    HesitantFuzzySoftSet l1 = soft_restricted_intersect(soft_restricted_union(f, g), h);
    HesitantFuzzySoftSet r1 = soft_restricted_union(soft_restricted_intersect(h, f),
                                                    soft_restricted_intersect(h, g));
    HesitantFuzzySoftSet l2 = soft_restricted_union(soft_restricted_intersect(f, g), h);
    HesitantFuzzySoftSet r2 = soft_restricted_intersect(soft_restricted_union(h, f),
                                                        soft_restricted_union(h, g));
    bool ok = true;
    for (IK k : {IK::P, IK::A})
      ok = ok && soft_equiv(k, l1, r1) && soft_equiv(k, l2, r2);
    if (!ok && why) *why = two(f, g) + " H=" + gen::soft_str(h);
    return ok;
  }));

  out.push_back(law("soft-product-demorgan", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySoftSet f = gen::soft(rng, b, u);
    HesitantFuzzySoftSet g =
        offset_soft(rng, b, u, rng.between(1, f.params().size() + 1),
                    rng.between(1, b.max_params));
    bool ok = product_equal(product_complement(soft_vee(f, g)),
                            soft_wedge(soft_complement(f), soft_complement(g))) &&
              product_equal(product_complement(soft_wedge(f, g)),
                            soft_vee(soft_complement(f), soft_complement(g)));
    if (!ok && why) *why = two(f, g);
    return ok;
  }));
}

}  // namespace hfs::laws::detail
