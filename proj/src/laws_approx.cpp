// Laws over rough approximations, hesitant and crisp: duality, unit
// sets, exchange with union/intersection, monotonicity in the target
// and in the threshold, the sandwich chains, and the fact that crisp
// approximations are determined by the crisp neighborhood table.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfs/approx.hpp"
#include "hfs/laws.hpp"
#include "lawgen.hpp"
#include "laws_build.hpp"

namespace hfs::laws::detail {

namespace {

using IK = InclusionKind;

Law law(std::string id, std::function<bool(Rng&, const GenBounds&, std::string*)> run) {
  return Law{std::move(id), Expect::HOLDS, std::move(run)};
}

// The order each suite's conclusions land in: P and T conclude up to
// upper bounds, the others up to both bounds.
IK concl(IK suite) {
  return suite == IK::P || suite == IK::T ? IK::P : IK::A;
}

std::string space_and_target(const CoveringSpace& s, const HesitantFuzzySet& x) {
  return gen::space_str(s) + " X=" + gen::hfs_str(x);
}

std::string space_and_objects(const CoveringSpace& s, const ObjectSet& x) {
  return gen::space_str(s) + " X=" + obj_str(*s.universe(), x);
}

// Every value strictly shorter than the bound, leaving room for a
// longer dominating partner.
HesitantFuzzySet short_hfs(Rng& rng, const GenBounds& b, const UniversePtr& u) {
  std::vector<HesitantElement> values;
  values.reserve(u->size());
  std::size_t cap = std::max<std::size_t>(1, b.max_len - 1);
  for (std::size_t i = 0; i < u->size(); ++i)
    values.push_back(gen::element_len(rng, b, rng.between(1, cap)));
  return HesitantFuzzySet(u, std::move(values));
}

// A value bracketed between the complement of the neighborhood value
// at the base object and that value itself, under the given kind.
// Where the bracket is empty a random value is returned and the
// caller's hypothesis recheck makes the case vacuous.
HesitantElement sandwich_value(Rng& rng, const GenBounds& b, IK kind,
                               const HesitantElement& snx) {
  Degree l = snx.lower();
  Degree u = snx.upper();
  switch (kind) {
    case IK::P: {
      if (u < l.complement()) break;
      Degree up = gen::degree_between(rng, b, l.complement(), u);
      std::size_t len = rng.between(1, b.max_len);
      std::vector<Degree> d{up};
      for (std::size_t i = 1; i < len; ++i)
        d.push_back(gen::degree_between(rng, b, kZero, up));
      return HesitantElement(std::move(d));
    }
    case IK::A: {
      if (u < l.complement()) break;
      Degree up = gen::degree_between(rng, b, l.complement(), u);
      Degree low = gen::degree_between(rng, b, u.complement(), std::min(l, up));
      std::size_t len = rng.between(1, b.max_len);
      std::vector<Degree> d{up};
      for (std::size_t i = 1; i + 1 < len; ++i)
        d.push_back(gen::degree_between(rng, b, low, up));
      if (len > 1) d.push_back(low);
      return HesitantElement(std::move(d));
    }
    case IK::S: {
      // Both sides pin the length to the neighborhood value's, with a
      // per-position bracket; both bounds decrease along the positions,
      // so sorting the draws keeps every bracket.
      std::size_t n = snx.size();
      std::vector<Degree> d;
      d.reserve(n);
      bool feasible = true;
      for (std::size_t i = 0; i < n; ++i) {
        Degree lo = snx[n - 1 - i].complement();
        Degree hi = snx[i];
        if (hi < lo) {
          feasible = false;
          break;
        }
        d.push_back(gen::degree_between(rng, b, lo, hi));
      }
      if (feasible) return HesitantElement(std::move(d));
      break;
    }
    case IK::N: {
      if (l < l.complement()) break;
      std::size_t len = rng.between(1, b.max_len);
      std::vector<Degree> d;
      d.reserve(len);
      for (std::size_t i = 0; i < len; ++i)
        d.push_back(gen::degree_between(rng, b, l.complement(), l));
      return HesitantElement(std::move(d));
    }
    default:
      // T: the two sides impose conflicting length constraints, so no
      // value satisfies both and the hypothesis cannot be met.
      break;
  }
  return gen::element(rng, b);
}

}  // namespace

void register_approximation_laws(std::vector<Law>& out) {
  // Lower of the complement is the complement of upper, exactly, for
  // every kind.
  for (IK k : kAllKinds) {
    out.push_back(law(std::string("approx-duality-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      CoveringSpace s = gen::defined_space(rng, b, k);
      HesitantFuzzySet x = gen::hfs(rng, b, s.universe());
      HesitantFuzzySet xc = hfs_complement(x);
      bool ok = hesitant_lower(s, xc) == hfs_complement(hesitant_upper(s, x)) &&
                hesitant_upper(s, xc) == hfs_complement(hesitant_lower(s, x));
      if (!ok && why) *why = space_and_target(s, x);
      return ok;
    }));
  }

  // The full and empty sets are units of lower/upper up to the N
  // equivalence (which pins all bounds to 1 resp. 0).
  for (IK k : {IK::P, IK::A, IK::M, IK::S, IK::T}) {
    out.push_back(law(std::string("approx-units-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      CoveringSpace s = gen::defined_space(rng, b, k);
      HesitantFuzzySet full = full_set(s.universe());
      HesitantFuzzySet empty = empty_set(s.universe());
      bool ok = hfs_equiv(IK::N, hesitant_lower(s, full), full) &&
                hfs_equiv(IK::N, hesitant_upper(s, empty), empty);
      if (!ok && why) *why = gen::space_str(s);
      return ok;
    }));
  }

  // For the N kind the unit statements are one-directional.
  out.push_back(law("approx-units-n", [](Rng& rng, const GenBounds& b, std::string* why) {
    CoveringSpace s = gen::defined_space(rng, b, IK::N);
    HesitantFuzzySet full = full_set(s.universe());
    HesitantFuzzySet empty = empty_set(s.universe());
    bool ok = hfs_includes(IK::N, full, hesitant_lower(s, full)) &&
              hfs_includes(IK::N, hesitant_upper(s, empty), empty);
    if (!ok && why) *why = gen::space_str(s);
    return ok;
  }));

  // Lower exchanges with intersection and upper with union up to the
  // suite's order; the opposite exchanges hold as inclusions.  (The M
  // suite states no such ordered items.)
  for (IK k : {IK::P, IK::A, IK::S, IK::T, IK::N}) {
    out.push_back(law(std::string("approx-exchange-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      IK r = concl(k);
      CoveringSpace s = gen::defined_space(rng, b, k);
      HesitantFuzzySet x = gen::hfs(rng, b, s.universe());
      HesitantFuzzySet y = gen::hfs(rng, b, s.universe());
      HesitantFuzzySet lx = hesitant_lower(s, x);
      HesitantFuzzySet ly = hesitant_lower(s, y);
      HesitantFuzzySet ux = hesitant_upper(s, x);
      HesitantFuzzySet uy = hesitant_upper(s, y);
      bool ok = hfs_equiv(r, hesitant_lower(s, hfs_intersect(x, y)), hfs_intersect(lx, ly)) &&
                hfs_equiv(r, hesitant_upper(s, hfs_union(x, y)), hfs_union(ux, uy)) &&
                hfs_includes(r, hfs_union(lx, ly), hesitant_lower(s, hfs_union(x, y))) &&
                hfs_includes(r, hesitant_upper(s, hfs_intersect(x, y)), hfs_intersect(ux, uy));
      if (!ok && why) *why = space_and_target(s, x) + " Y=" + gen::hfs_str(y);
      return ok;
    }));
  }

  // A target dominated under the suite's kind gives monotone lower and
  // upper, and turns the opposite exchange inclusions into equalities.
  for (IK k : {IK::P, IK::A, IK::S, IK::T, IK::N}) {
    out.push_back(law(std::string("approx-monotone-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      IK r = concl(k);
      CoveringSpace s = gen::defined_space(rng, b, k);
      HesitantFuzzySet x = k == IK::T ? short_hfs(rng, b, s.universe())
                                      : gen::hfs(rng, b, s.universe());
      HesitantFuzzySet y = gen::dominating_hfs(rng, b, k, x);
      if (!hfs_includes(k, x, y)) return true;
      HesitantFuzzySet lx = hesitant_lower(s, x);
      HesitantFuzzySet ly = hesitant_lower(s, y);
      HesitantFuzzySet ux = hesitant_upper(s, x);
      HesitantFuzzySet uy = hesitant_upper(s, y);
      bool ok = hfs_includes(r, lx, ly) && hfs_includes(r, ux, uy) &&
                hfs_equiv(r, hfs_union(lx, ly), hesitant_lower(s, hfs_union(x, y))) &&
                hfs_equiv(r, hesitant_upper(s, hfs_intersect(x, y)), hfs_intersect(ux, uy));
      if (!ok && why) *why = space_and_target(s, x) + " Y=" + gen::hfs_str(y);
      return ok;
    }));
  }

  // When the target sits between the complement of each object's own
  // neighborhood value and the value itself, the approximations nest
  // around it: lower(lower) <= lower <= X <= upper <= upper(upper).
  for (IK k : {IK::P, IK::A, IK::S, IK::T, IK::N}) {
    out.push_back(law(std::string("approx-sandwich-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      IK r = concl(k);
      CoveringSpace s = gen::defined_space(rng, b, k);
      std::vector<HesitantElement> own;
      for (std::size_t i = 0; i < s.universe()->size(); ++i)
        own.push_back(fuzzy_neighborhood(s, i).get().at(i));
      std::vector<HesitantElement> values;
      for (const HesitantElement& snx : own)
        values.push_back(sandwich_value(rng, b, k, snx));
      HesitantFuzzySet x(s.universe(), std::move(values));
      for (std::size_t i = 0; i < own.size(); ++i)
        if (!elem_includes(k, elem_complement(own[i]), x.at(i)) ||
            !elem_includes(k, x.at(i), own[i]))
          return true;
      HesitantFuzzySet low = hesitant_lower(s, x);
      HesitantFuzzySet up = hesitant_upper(s, x);
      bool ok = hfs_includes(r, hesitant_lower(s, low), low) && hfs_includes(r, low, x) &&
                hfs_includes(r, x, up) && hfs_includes(r, up, hesitant_upper(s, up));
      if (!ok && why) *why = space_and_target(s, x);
      return ok;
    }));
  }

  // A larger threshold coarsens the approximations: upper grows with
  // the threshold, lower shrinks.
  for (IK k : kAllKinds) {
    out.push_back(law(std::string("approx-beta-monotone-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      auto [s1, s2] = gen::beta_pair_spaces(rng, b, k);
      HesitantFuzzySet x = gen::hfs(rng, b, s2.universe());
      bool ok = hfs_includes(IK::A, hesitant_upper(s1, x), hesitant_upper(s2, x)) &&
                hfs_includes(IK::A, hesitant_lower(s2, x), hesitant_lower(s1, x));
      if (!ok && why)
        *why = "beta1=" + s1.beta().str() + " " + space_and_target(s2, x);
      return ok;
    }));
  }

  // Crisp duality is exact for every kind, including where the crisp
  // neighborhood is empty.
  for (IK k : kAllKinds) {
    out.push_back(law(std::string("crisp-approx-duality-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      CoveringSpace s = gen::defined_space(rng, b, k);
      ObjectSet x = gen::object_set(rng, *s.universe());
      ObjectSet xc = obj_complement(*s.universe(), x);
      bool ok = crisp_lower(s, xc) == obj_complement(*s.universe(), crisp_upper(s, x)) &&
                crisp_upper(s, xc) == obj_complement(*s.universe(), crisp_lower(s, x));
      if (!ok && why) *why = space_and_objects(s, x);
      return ok;
    }));
  }

  // Crisp suites with self-membership (P, A, T, N): units, target
  // monotonicity, the one-sided and exact exchanges, and the sandwich.
  for (IK k : {IK::P, IK::A, IK::T, IK::N}) {
    out.push_back(law(std::string("crisp-approx-suite-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      CoveringSpace s = gen::defined_space(rng, b, k);
      const Universe& u = *s.universe();
      ObjectSet none;
      ObjectSet all = obj_universe(u);
      ObjectSet x = gen::object_set(rng, u);
      ObjectSet y = gen::object_set(rng, u);
      ObjectSet ysup = obj_union(x, gen::object_set(rng, u));
      ObjectSet lx = crisp_lower(s, x);
      ObjectSet ly = crisp_lower(s, y);
      ObjectSet ux = crisp_upper(s, x);
      ObjectSet uy = crisp_upper(s, y);
      bool ok = crisp_lower(s, none) == none && crisp_lower(s, all) == all &&
                crisp_upper(s, none) == none && crisp_upper(s, all) == all &&
                obj_subset(lx, crisp_lower(s, ysup)) && obj_subset(ux, crisp_upper(s, ysup)) &&
                obj_subset(obj_union(lx, ly), crisp_lower(s, obj_union(x, y))) &&
                obj_subset(crisp_upper(s, obj_intersect(x, y)), obj_intersect(ux, uy)) &&
                obj_intersect(lx, ly) == crisp_lower(s, obj_intersect(x, y)) &&
                crisp_upper(s, obj_union(x, y)) == obj_union(ux, uy) &&
                obj_subset(lx, x) && obj_subset(x, ux);
      if (!ok && why) *why = space_and_objects(s, x) + " Y=" + obj_str(u, y);
      return ok;
    }));
  }

  // The M and S kinds admit empty crisp neighborhoods, which join the
  // lower approximation of every target and leave the upper one; the
  // unit statements hold exactly on the objects with a nonempty
  // neighborhood, and there is no sandwich.
  for (IK k : {IK::M, IK::S}) {
    out.push_back(law(std::string("crisp-approx-suite-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      CoveringSpace s = gen::defined_space(rng, b, k);
      const Universe& u = *s.universe();
      ObjectSet none;
      ObjectSet all = obj_universe(u);
      ObjectSet bare;  // objects whose crisp neighborhood is empty
      for (std::size_t i = 0; i < u.size(); ++i)
        if (crisp_neighborhood(s, i).get().empty()) bare.push_back(i);
      ObjectSet x = gen::object_set(rng, u);
      ObjectSet y = gen::object_set(rng, u);
      ObjectSet ysup = obj_union(x, gen::object_set(rng, u));
      ObjectSet lx = crisp_lower(s, x);
      ObjectSet ly = crisp_lower(s, y);
      ObjectSet ux = crisp_upper(s, x);
      ObjectSet uy = crisp_upper(s, y);
      bool ok = crisp_lower(s, none) == bare && crisp_lower(s, all) == all &&
                crisp_upper(s, none) == none &&
                crisp_upper(s, all) == obj_complement(u, bare) &&
                obj_subset(lx, crisp_lower(s, ysup)) && obj_subset(ux, crisp_upper(s, ysup)) &&
                obj_subset(obj_union(lx, ly), crisp_lower(s, obj_union(x, y))) &&
                obj_subset(crisp_upper(s, obj_intersect(x, y)), obj_intersect(ux, uy)) &&
                obj_intersect(lx, ly) == crisp_lower(s, obj_intersect(x, y)) &&
                crisp_upper(s, obj_union(x, y)) == obj_union(ux, uy);
      if (!ok && why) *why = space_and_objects(s, x) + " Y=" + obj_str(u, y);
      return ok;
    }));
  }

  // Two spaces over the same universe, threshold and kind whose crisp
  // neighborhood tables coincide produce identical crisp
  // approximations, whatever their parameter sets look like.
  for (IK k : kAllKinds) {
    out.push_back(law(std::string("crisp-transport-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      CoveringSpace s1 = gen::defined_space(rng, b, k);
      const HesitantFuzzySoftSet& f = s1.soft();
      std::optional<CoveringSpace> s2;
      if (rng.coin()) {
        // Same images behind permuted parameter names: the tables are
        // guaranteed to coincide, making the hypothesis non-vacuous.
        std::vector<std::size_t> perm(f.params().size());
        for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
        for (std::size_t j = perm.size(); j > 1; --j)
          std::swap(perm[j - 1], perm[rng.below(j)]);
        std::vector<std::string> names;
        std::vector<HesitantFuzzySet> images;
        for (std::size_t j = 0; j < perm.size(); ++j) {
          names.push_back("e" + std::to_string(j + 1));
          images.push_back(f.image(perm[j]));
        }
        s2.emplace(HesitantFuzzySoftSet(f.universe(), ParameterSet(std::move(names)),
                                        std::move(images)),
                   s1.beta(), k);
      } else {
        HesitantFuzzySoftSet g = gen::soft(rng, b, f.universe());
        if (!beta_covers(g, s1.beta(), k)) return true;
        s2.emplace(std::move(g), s1.beta(), k);
        if (!all_defined(*s2)) return true;
      }
      for (std::size_t i = 0; i < f.universe()->size(); ++i)
        if (crisp_neighborhood(s1, i).get() != crisp_neighborhood(*s2, i).get())
          return true;
      ObjectSet x = gen::object_set(rng, *f.universe());
      bool ok = crisp_lower(s1, x) == crisp_lower(*s2, x) &&
                crisp_upper(s1, x) == crisp_upper(*s2, x);
      if (!ok && why)
        *why = space_and_objects(s1, x) + " other=" + gen::soft_str(s2->soft());
      return ok;
    }));
  }
}

}  // namespace hfs::laws::detail
