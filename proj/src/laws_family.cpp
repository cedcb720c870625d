// Laws over whole hesitant fuzzy sets and finite families of them:
// fold order-independence, the exact set-level algebra, lattice
// identities up to =_p/=_a/=_m, threshold-vs-fold characterizations,
// and monotonicity under subfamilies.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hfs/hfset.hpp"
#include "hfs/laws.hpp"
#include "lawgen.hpp"
#include "laws_build.hpp"

namespace hfs::laws::detail {

namespace {

using IK = InclusionKind;

std::string fam_str(const HfsFamily& fam) {
  std::string out = "[";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i) out += ", ";
    out += gen::hfs_str(fam[i]);
  }
  return out + "]";
}

HfsFamily random_family(Rng& rng, const GenBounds& b, const UniversePtr& u) {
  HfsFamily fam;
  std::size_t n = rng.between(1, b.max_params);
  fam.reserve(n);
  for (std::size_t i = 0; i < n; ++i) fam.push_back(gen::hfs(rng, b, u));
  return fam;
}

// A pointwise short A (every value shorter than max_len), usable below
// T-dominating images.
HesitantFuzzySet short_hfs(Rng& rng, const GenBounds& b, const UniversePtr& u) {
  std::vector<HesitantElement> vals;
  vals.reserve(u->size());
  std::size_t cap = std::max<std::size_t>(1, b.max_len - 1);
  for (std::size_t i = 0; i < u->size(); ++i)
    vals.push_back(gen::element_len(rng, b, rng.between(1, cap)));
  return HesitantFuzzySet(u, std::move(vals));
}

bool hfs_includes_sot(const HesitantFuzzySet& a, const HesitantFuzzySet& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!elem_includes_sot(a.at(i), c.at(i))) return false;
  return true;
}

Law law(std::string id, std::function<bool(Rng&, const GenBounds&, std::string*)> run) {
  return Law{std::move(id), Expect::HOLDS, std::move(run)};
}

}  // namespace

void register_family_laws(std::vector<Law>& out) {
  // The n-ary folds do not depend on the order the family is folded in.
  out.push_back(law("fam-fold-order-invariant",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HfsFamily fam = random_family(rng, b, u);
    HfsFamily shuffled = fam;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    bool ok = family_union(fam) == family_union(shuffled) &&
              family_intersect(fam) == family_intersect(shuffled);
    if (!ok && why) *why = "family=" + fam_str(fam);
    return ok;
  }));

  // Commutativity, associativity, involution and De Morgan hold as
  // exact multiset equalities object by object.
  out.push_back(law("set-lattice-exact", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySet x = gen::hfs(rng, b, u), y = gen::hfs(rng, b, u),
                     z = gen::hfs(rng, b, u);
    bool ok = hfs_union(x, y) == hfs_union(y, x) &&
              hfs_intersect(x, y) == hfs_intersect(y, x) &&
              hfs_union(hfs_union(x, y), z) == hfs_union(x, hfs_union(y, z)) &&
              hfs_intersect(hfs_intersect(x, y), z) == hfs_intersect(x, hfs_intersect(y, z)) &&
              hfs_complement(hfs_complement(x)) == x &&
              hfs_complement(hfs_intersect(x, y)) ==
                  hfs_union(hfs_complement(x), hfs_complement(y)) &&
              hfs_complement(hfs_union(x, y)) ==
                  hfs_intersect(hfs_complement(x), hfs_complement(y));
    if (!ok && why)
      *why = "X=" + gen::hfs_str(x) + " Y=" + gen::hfs_str(y) + " Z=" + gen::hfs_str(z);
    return ok;
  }));

  // Idempotence holds up to =_p/=_a/=_m; absorption and distributivity
  // hold up to =_p/=_a (and provably not =_m).
  out.push_back(law("set-idempotent-absorb-distrib",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySet x = gen::hfs(rng, b, u), y = gen::hfs(rng, b, u),
                     z = gen::hfs(rng, b, u);
    bool ok = true;
    for (IK k : {IK::P, IK::A, IK::M})
      ok = ok && hfs_equiv(k, hfs_union(x, x), x) && hfs_equiv(k, hfs_intersect(x, x), x);
    for (IK k : {IK::P, IK::A}) {
      ok = ok && hfs_equiv(k, hfs_intersect(hfs_union(x, y), x), x) &&
           hfs_equiv(k, hfs_union(hfs_intersect(x, y), x), x);
      ok = ok &&
           hfs_equiv(k, hfs_intersect(hfs_union(x, y), z),
                     hfs_union(hfs_intersect(z, x), hfs_intersect(z, y))) &&
           hfs_equiv(k, hfs_union(hfs_intersect(x, y), z),
                     hfs_intersect(hfs_union(z, x), hfs_union(z, y)));
    }
    if (!ok && why)
      *why = "X=" + gen::hfs_str(x) + " Y=" + gen::hfs_str(y) + " Z=" + gen::hfs_str(z);
    return ok;
  }));

  // Being below every member is the same as being below the
  // intersection (P, A, N); for T only the forward direction holds.
  for (IK k : {IK::P, IK::A, IK::N}) {
    out.push_back(law(std::string("fam-meet-threshold-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      UniversePtr u = gen::universe(rng, b);
      HfsFamily fam = random_family(rng, b, u);
      HesitantFuzzySet folded = family_intersect(fam);
      HesitantFuzzySet a =
          rng.coin() ? gen::dominated_hfs(rng, b, k, folded) : gen::hfs(rng, b, u);
      bool all = true;
      for (const HesitantFuzzySet& h : fam) all = all && hfs_includes(k, a, h);
      bool ok = all == hfs_includes(k, a, folded);
      if (!ok && why) *why = "A=" + gen::hfs_str(a) + " family=" + fam_str(fam);
      return ok;
    }));
  }

  out.push_back(law("fam-meet-threshold-t", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySet a = short_hfs(rng, b, u);
    HfsFamily fam;
    std::size_t n = rng.between(1, b.max_params);
    for (std::size_t i = 0; i < n; ++i) fam.push_back(gen::dominating_hfs(rng, b, IK::T, a));
    bool all = true;
    for (const HesitantFuzzySet& h : fam) all = all && hfs_includes(IK::T, a, h);
    bool ok = !all || hfs_includes(IK::T, a, family_intersect(fam));
    if (!ok && why) *why = "A=" + gen::hfs_str(a) + " family=" + fam_str(fam);
    return ok;
  }));

  // Being below one member puts the threshold below the union (P, A,
  // N).  For T this needs every member to be pointwise longer.
  for (IK k : {IK::P, IK::A, IK::N}) {
    out.push_back(law(std::string("fam-join-threshold-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      UniversePtr u = gen::universe(rng, b);
      HfsFamily fam = random_family(rng, b, u);
      const HesitantFuzzySet& pick = fam[rng.below(fam.size())];
      HesitantFuzzySet a =
          rng.coin() ? gen::dominated_hfs(rng, b, k, pick) : gen::hfs(rng, b, u);
      bool some = false;
      for (const HesitantFuzzySet& h : fam) some = some || hfs_includes(k, a, h);
      bool ok = !some || hfs_includes(k, a, family_union(fam));
      if (!ok && why) *why = "A=" + gen::hfs_str(a) + " family=" + fam_str(fam);
      return ok;
    }));
  }

  out.push_back(law("fam-join-threshold-t", [](Rng& rng, const GenBounds& b, std::string* why) {
    UniversePtr u = gen::universe(rng, b);
    HesitantFuzzySet a = short_hfs(rng, b, u);
    std::size_t n = rng.between(1, b.max_params);
    std::size_t pick = rng.below(n);
    HfsFamily fam;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pick) {
        fam.push_back(gen::dominating_hfs(rng, b, IK::T, a));
      } else {
        std::vector<HesitantElement> vals;
        for (std::size_t x = 0; x < u->size(); ++x)
          vals.push_back(gen::element_len(rng, b, rng.between(a.at(x).size() + 1, b.max_len)));
        fam.emplace_back(u, std::move(vals));
      }
    }
    bool some = false;
    bool longer = true;
    for (const HesitantFuzzySet& h : fam) {
      some = some || hfs_includes(IK::T, a, h);
      for (std::size_t x = 0; x < u->size(); ++x)
        longer = longer && a.at(x).size() < h.at(x).size();
    }
    bool ok = !(some && longer) || hfs_includes(IK::T, a, family_union(fam));
    if (!ok && why) *why = "A=" + gen::hfs_str(a) + " family=" + fam_str(fam);
    return ok;
  }));

  // Growing a family shrinks its intersection and grows its union; the
  // intersection of the subfamily stays below the union of the whole.
  auto subfamily_law = [](const char* id,
                          std::function<bool(const HfsFamily&, const HfsFamily&)> claim) {
    return law(id, [claim](Rng& rng, const GenBounds& b, std::string* why) {
      UniversePtr u = gen::universe(rng, b);
      HfsFamily fam2 = random_family(rng, b, u);
      HfsFamily fam1;
      std::size_t forced = rng.below(fam2.size());
      for (std::size_t i = 0; i < fam2.size(); ++i)
        if (i == forced || rng.coin()) fam1.push_back(fam2[i]);
      bool ok = claim(fam1, fam2);
      if (!ok && why) *why = "sub=" + fam_str(fam1) + " family=" + fam_str(fam2);
      return ok;
    });
  };

  out.push_back(subfamily_law("fam-subfamily-meet-antitone",
                              [](const HfsFamily& f1, const HfsFamily& f2) {
    HesitantFuzzySet m1 = family_intersect(f1), m2 = family_intersect(f2);
    return hfs_includes(IK::P, m2, m1) && hfs_includes(IK::A, m2, m1);
  }));

  out.push_back(subfamily_law("fam-subfamily-join-monotone",
                              [](const HfsFamily& f1, const HfsFamily& f2) {
    HesitantFuzzySet j1 = family_union(f1), j2 = family_union(f2);
    return hfs_includes(IK::P, j1, j2) && hfs_includes(IK::A, j1, j2) &&
           hfs_includes_sot(j1, j2);
  }));

  out.push_back(subfamily_law("fam-subfamily-meet-below-join",
                              [](const HfsFamily& f1, const HfsFamily& f2) {
    HesitantFuzzySet m1 = family_intersect(f1), j2 = family_union(f2);
    return hfs_includes(IK::P, m1, j2) && hfs_includes(IK::A, m1, j2) &&
           hfs_includes_sot(m1, j2);
  }));
}

}  // namespace hfs::laws::detail
