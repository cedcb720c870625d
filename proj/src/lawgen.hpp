#pragma once

// Internal: randomized instance construction for the law suite.  Every
// function is a pure function of the Rng stream.  Where a law has a
// hypothesis (a dominating pair, a valid space, a fully defined space),
// instances are built constructively so hypotheses hold by construction
// rather than by rejection.  Not installed.

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfs/approx.hpp"
#include "hfs/laws.hpp"

namespace hfs::laws::gen {

inline std::int64_t grid_step(const GenBounds& b) {
  std::int64_t step = Degree::kScale;
  for (int i = 0; i < b.grid_digits; ++i) step /= 10;
  return step;
}

// Any grid point in [0,1].
inline Degree degree(Rng& rng, const GenBounds& b) {
  std::int64_t step = grid_step(b);
  std::size_t points = static_cast<std::size_t>(Degree::kScale / step) + 1;
  return Degree::from_ticks(static_cast<std::int64_t>(rng.below(points)) * step);
}

// A grid point in [lo, hi]; lo and hi must themselves be grid points.
inline Degree degree_between(Rng& rng, const GenBounds& b, Degree lo, Degree hi) {
  assert(lo <= hi);
  std::int64_t step = grid_step(b);
  std::size_t points = static_cast<std::size_t>((hi.ticks() - lo.ticks()) / step) + 1;
  return Degree::from_ticks(lo.ticks() + static_cast<std::int64_t>(rng.below(points)) * step);
}

inline HesitantElement element_len(Rng& rng, const GenBounds& b, std::size_t len) {
  std::vector<Degree> d;
  d.reserve(len);
  for (std::size_t i = 0; i < len; ++i) d.push_back(degree(rng, b));
  return HesitantElement(std::move(d));
}

inline HesitantElement element(Rng& rng, const GenBounds& b) {
  return element_len(rng, b, rng.between(1, b.max_len));
}

// All degrees drawn from [min_low, 1].
inline HesitantElement element_at_least(Rng& rng, const GenBounds& b, Degree min_low,
                                        std::size_t len) {
  std::vector<Degree> d;
  d.reserve(len);
  for (std::size_t i = 0; i < len; ++i) d.push_back(degree_between(rng, b, min_low, kOne));
  return HesitantElement(std::move(d));
}

inline UniversePtr universe(Rng& rng, const GenBounds& b) {
  std::size_t n = rng.between(1, b.max_objects);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return make_universe(std::move(names));
}

inline HesitantFuzzySet hfs(Rng& rng, const GenBounds& b, const UniversePtr& u) {
  std::vector<HesitantElement> values;
  values.reserve(u->size());
  for (std::size_t i = 0; i < u->size(); ++i) values.push_back(element(rng, b));
  return HesitantFuzzySet(u, std::move(values));
}

inline HesitantFuzzySoftSet soft(Rng& rng, const GenBounds& b, const UniversePtr& u,
                                 std::size_t nparams) {
  std::vector<std::string> names;
  std::vector<HesitantFuzzySet> images;
  for (std::size_t i = 0; i < nparams; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    images.push_back(hfs(rng, b, u));
  }
  return HesitantFuzzySoftSet(u, ParameterSet(std::move(names)), std::move(images));
}

inline HesitantFuzzySoftSet soft(Rng& rng, const GenBounds& b, const UniversePtr& u) {
  return soft(rng, b, u, rng.between(1, b.max_params));
}

// Any subset of the universe, possibly empty or full.
inline ObjectSet object_set(Rng& rng, const Universe& u) {
  ObjectSet out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (rng.coin()) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------
// Dominating / dominated constructions.
//
// Raising entries of a descending sequence pointwise and re-sorting
// preserves index-wise domination (the k-th largest can only grow), and
// so does inserting extra entries; lowering pointwise and appending
// entries no larger than the minimum preserves it downward.  All the
// kind-specific constructions below lean on that.

// An h2 with h1 c_kind h2.  For T the caller must leave room:
// |h1| < max_len.
inline HesitantElement dominating(Rng& rng, const GenBounds& b, InclusionKind kind,
                                  const HesitantElement& h1) {
  switch (kind) {
    case InclusionKind::P: {
      HesitantElement h2 = element(rng, b);
      std::vector<Degree> d = h2.degrees();
      d[0] = degree_between(rng, b, std::max(d[0], h1.upper()), kOne);
      return HesitantElement(std::move(d));
    }
    case InclusionKind::A: {
      Degree low = degree_between(rng, b, h1.lower(), kOne);
      Degree up = degree_between(rng, b, std::max(low, h1.upper()), kOne);
      std::size_t len = rng.between(1, b.max_len);
      std::vector<Degree> d{up};
      for (std::size_t i = 1; i + 1 < len; ++i) d.push_back(degree_between(rng, b, low, up));
      if (len > 1) d.push_back(low);
      return HesitantElement(std::move(d));
    }
    case InclusionKind::M:
    case InclusionKind::S: {
      // A same-or-shorter pointwise-raised copy dominates index-wise,
      // hence under S; the full-length version also dominates the mean.
      std::size_t len = kind == InclusionKind::S ? rng.between(1, h1.size()) : h1.size();
      std::vector<Degree> d;
      d.reserve(len);
      for (std::size_t i = 0; i < len; ++i)
        d.push_back(degree_between(rng, b, h1[i], kOne));
      if (kind == InclusionKind::M) {
        // Entries >= h1's maximum can be appended without pulling the
        // mean below mean(h1), which varies the length.
        while (d.size() < b.max_len && rng.coin() && rng.coin())
          d.push_back(degree_between(rng, b, h1.upper(), kOne));
      }
      return HesitantElement(std::move(d));
    }
    case InclusionKind::T: {
      assert(h1.size() < b.max_len);
      std::size_t len = rng.between(h1.size() + 1, b.max_len);
      std::vector<Degree> d;
      d.reserve(len);
      for (std::size_t i = 0; i < h1.size(); ++i)
        d.push_back(degree_between(rng, b, h1[i], kOne));
      while (d.size() < len) d.push_back(degree(rng, b));
      return HesitantElement(std::move(d));
    }
    case InclusionKind::N:
      return element_at_least(rng, b, h1.upper(), rng.between(1, b.max_len));
  }
  return h1;
}

// An h1 with h1 c_kind h2.  For T the caller must ensure |h2| > 1.
inline HesitantElement dominated(Rng& rng, const GenBounds& b, InclusionKind kind,
                                 const HesitantElement& h2) {
  switch (kind) {
    case InclusionKind::P: {
      HesitantElement h1 = element(rng, b);
      std::vector<Degree> d;
      d.reserve(h1.size());
      for (Degree g : h1.degrees()) d.push_back(std::min(g, h2.upper()));
      return HesitantElement(std::move(d));
    }
    case InclusionKind::A: {
      // A singleton is its own lower bound, so it must sit below
      // h2.lower(), not just h2.upper().
      std::size_t len = rng.between(1, b.max_len);
      Degree low = degree_between(rng, b, kZero, h2.lower());
      if (len == 1) return HesitantElement({low});
      Degree up = degree_between(rng, b, low, h2.upper());
      std::vector<Degree> d{up};
      for (std::size_t i = 1; i + 1 < len; ++i) d.push_back(degree_between(rng, b, low, up));
      d.push_back(low);
      return HesitantElement(std::move(d));
    }
    case InclusionKind::M: {
      std::vector<Degree> d;
      d.reserve(h2.size());
      for (std::size_t i = 0; i < h2.size(); ++i)
        d.push_back(degree_between(rng, b, kZero, h2[i]));
      // Entries <= h2's minimum keep the mean below mean(h2).
      while (d.size() < b.max_len && rng.coin() && rng.coin())
        d.push_back(degree_between(rng, b, kZero, h2.lower()));
      return HesitantElement(std::move(d));
    }
    case InclusionKind::S: {
      std::size_t len = rng.between(h2.size(), b.max_len);
      std::vector<Degree> d;
      d.reserve(len);
      for (std::size_t i = 0; i < h2.size(); ++i)
        d.push_back(degree_between(rng, b, kZero, h2[i]));
      while (d.size() < len) d.push_back(degree_between(rng, b, kZero, h2.lower()));
      return HesitantElement(std::move(d));
    }
    case InclusionKind::T: {
      assert(h2.size() > 1);
      std::size_t len = rng.between(1, h2.size() - 1);
      std::vector<Degree> d;
      d.reserve(len);
      for (std::size_t i = 0; i < len; ++i)
        d.push_back(degree_between(rng, b, kZero, h2[i]));
      return HesitantElement(std::move(d));
    }
    case InclusionKind::N:
      return HesitantElement(
          std::vector<Degree>{degree_between(rng, b, kZero, h2.lower())});
  }
  return h2;
}

// A pointwise-dominating set: X c_kind Y at every object.
inline HesitantFuzzySet dominating_hfs(Rng& rng, const GenBounds& b, InclusionKind kind,
                                       const HesitantFuzzySet& x) {
  std::vector<HesitantElement> values;
  values.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    values.push_back(dominating(rng, b, kind, x.at(i)));
  return HesitantFuzzySet(x.universe(), std::move(values));
}

inline HesitantFuzzySet dominated_hfs(Rng& rng, const GenBounds& b, InclusionKind kind,
                                      const HesitantFuzzySet& x) {
  std::vector<HesitantElement> values;
  values.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    values.push_back(dominated(rng, b, kind, x.at(i)));
  return HesitantFuzzySet(x.universe(), std::move(values));
}

// A beta suitable as a covering threshold of the given kind.  T needs
// the union to be longer than beta, so beta leaves headroom; S needs the
// union to be no longer, which the space construction arranges.
inline HesitantElement threshold(Rng& rng, const GenBounds& b, InclusionKind kind) {
  if (kind == InclusionKind::T)
    return element_len(rng, b, rng.between(1, std::max<std::size_t>(1, b.max_len - 1)));
  return element(rng, b);
}

namespace detail_gen {

// Replaces one image value of a soft set at one object.
inline HesitantFuzzySoftSet replace_cell(const HesitantFuzzySoftSet& f, std::size_t param,
                                         std::size_t x, HesitantElement value) {
  std::vector<HesitantFuzzySet> images;
  images.reserve(f.params().size());
  for (std::size_t j = 0; j < f.params().size(); ++j) {
    if (j == param) {
      std::vector<HesitantElement> vals = f.image(j).values();
      vals[x] = value;
      images.emplace_back(f.universe(), std::move(vals));
    } else {
      images.push_back(f.image(j));
    }
  }
  return HesitantFuzzySoftSet(f.universe(), f.params(), std::move(images));
}

// A one-parameter soft set whose single image dominates beta everywhere:
// always a valid covering and always fully defined.
inline HesitantFuzzySoftSet dominating_soft(Rng& rng, const GenBounds& b,
                                            InclusionKind kind, const UniversePtr& u,
                                            const HesitantElement& beta) {
  std::vector<HesitantElement> values;
  values.reserve(u->size());
  for (std::size_t x = 0; x < u->size(); ++x)
    values.push_back(dominating(rng, b, kind, beta));
  std::vector<HesitantFuzzySet> images;
  images.emplace_back(u, std::move(values));
  return HesitantFuzzySoftSet(u, ParameterSet({"e1"}), std::move(images));
}

// Renames parameters to e1..ek (after merging sets from different sources).
inline HesitantFuzzySoftSet renumber(const HesitantFuzzySoftSet& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < f.params().size(); ++i)
    names.push_back("e" + std::to_string(i + 1));
  return HesitantFuzzySoftSet(f.universe(), ParameterSet(std::move(names)), f.images());
}

// Tries to extend a valid space's soft set with extra random parameters,
// keeping validity (and definedness when asked).
inline HesitantFuzzySoftSet grow_soft(Rng& rng, const GenBounds& b, InclusionKind kind,
                                      const HesitantElement& beta,
                                      HesitantFuzzySoftSet base, bool keep_defined) {
  std::size_t room = b.max_params - base.params().size();
  std::size_t want = room == 0 ? 0 : rng.below(room + 1);
  for (std::size_t i = 0; i < want; ++i) {
    std::vector<HesitantFuzzySet> images = base.images();
    images.push_back(hfs(rng, b, base.universe()));
    std::vector<std::string> names = base.params().params();
    names.push_back("e" + std::to_string(names.size() + 1));
    HesitantFuzzySoftSet candidate(base.universe(), ParameterSet(std::move(names)),
                                   std::move(images));
    if (!beta_covers(candidate, beta, kind)) continue;
    if (keep_defined) {
      // Adding parameters never removes definedness, so nothing to check.
    }
    base = std::move(candidate);
  }
  return base;
}

}  // namespace detail_gen

// A valid covering space of the given kind.  Random attempts first; for
// P/A/N a failing soft set is repaired by planting a dominating cell
// (the union keeps the relevant bounds); for M/S/T repair falls back to
// a one-parameter dominating soft set, then grows it while validity
// allows.
inline CoveringSpace space(Rng& rng, const GenBounds& b, InclusionKind kind) {
  HesitantElement beta = threshold(rng, b, kind);
  UniversePtr u = universe(rng, b);
  for (int attempt = 0; attempt < 4; ++attempt) {
    HesitantFuzzySoftSet f = soft(rng, b, u);
    if (beta_covers(f, beta, kind)) return CoveringSpace(std::move(f), beta, kind);
    if (kind == InclusionKind::P || kind == InclusionKind::A || kind == InclusionKind::N) {
      HesitantFuzzySet all = family_union(f.images());
      for (std::size_t x = 0; x < u->size(); ++x) {
        if (elem_includes(kind, beta, all.at(x))) continue;
        std::size_t j = rng.below(f.params().size());
        f = detail_gen::replace_cell(f, j, x, dominating(rng, b, kind, beta));
      }
      return CoveringSpace(std::move(f), beta, kind);
    }
  }
  HesitantFuzzySoftSet f = detail_gen::dominating_soft(rng, b, kind, u, beta);
  f = detail_gen::grow_soft(rng, b, kind, beta, std::move(f), false);
  return CoveringSpace(std::move(f), beta, kind);
}

// As above, additionally guaranteeing a qualifying parameter for every
// object (every neighborhood Defined).
inline CoveringSpace defined_space(Rng& rng, const GenBounds& b, InclusionKind kind) {
  CoveringSpace s = space(rng, b, kind);
  HesitantFuzzySoftSet f = s.soft();
  const HesitantElement& beta = s.beta();
  bool rebuilt = false;
  for (std::size_t x = 0; x < f.universe()->size(); ++x) {
    bool defined = false;
    for (std::size_t j = 0; j < f.params().size() && !defined; ++j)
      defined = elem_includes(kind, beta, f.image(j).at(x));
    if (defined) continue;
    std::size_t j = rng.below(f.params().size());
    HesitantFuzzySoftSet repaired =
        detail_gen::replace_cell(f, j, x, dominating(rng, b, kind, beta));
    if (beta_covers(repaired, beta, kind)) {
      f = std::move(repaired);
    } else {
      f = detail_gen::dominating_soft(rng, b, kind, f.universe(), beta);
      f = detail_gen::grow_soft(rng, b, kind, beta, std::move(f), true);
      rebuilt = true;
      break;
    }
  }
  (void)rebuilt;
  return CoveringSpace(std::move(f), beta, kind);
}

// Two spaces over one soft set with beta1 c_kind beta2, both valid, and
// every neighborhood of the beta2 space Defined (which forces the same
// for beta1).
inline std::pair<CoveringSpace, CoveringSpace> beta_pair_spaces(Rng& rng,
                                                                const GenBounds& b,
                                                                InclusionKind kind) {
  CoveringSpace s2 = defined_space(rng, b, kind);
  if (kind == InclusionKind::T && s2.beta().size() == 1) {
    // dominated() needs room below; a length-1 beta2 leaves none, so
    // nudge: reuse beta2 itself scaled down is impossible — instead
    // rebuild with a longer beta2 by retrying the stream.
    while (s2.beta().size() == 1) s2 = defined_space(rng, b, kind);
  }
  HesitantElement beta1 = dominated(rng, b, kind, s2.beta());
  CoveringSpace s1(s2.soft(), beta1, kind);
  return {std::move(s1), std::move(s2)};
}

// ---------------------------------------------------------------------
// Rendering (for failure reports) and shrinking.

inline std::string hfs_str(const HesitantFuzzySet& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ", ";
    out += h.universe()->name(i) + ":" + h.at(i).str();
  }
  return out + "}";
}

inline std::string soft_str(const HesitantFuzzySoftSet& f) {
  std::string out = "(";
  for (std::size_t j = 0; j < f.params().size(); ++j) {
    if (j) out += "; ";
    out += f.params().name(j) + "=" + hfs_str(f.image(j));
  }
  return out + ")";
}

inline std::string space_str(const CoveringSpace& s) {
  std::string out = "kind=";
  out += kind_letter(s.kind());
  out += " beta=" + s.beta().str() + " soft=" + soft_str(s.soft());
  return out;
}

// Greedy shrink driver: repeatedly replaces the instance with the first
// candidate that still fails, until no candidate does.
template <typename Inst>
std::string shrink_and_render(
    Inst inst, const std::function<bool(const Inst&)>& passes,
    const std::function<std::vector<Inst>(const Inst&)>& candidates,
    const std::function<std::string(const Inst&)>& render) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (Inst& c : [&] { return candidates(inst); }()) {
      if (!passes(c)) {
        inst = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return render(inst);
}

// Candidates for one element: drop each degree in turn (length > 1).
inline std::vector<HesitantElement> shrink_element(const HesitantElement& h) {
  std::vector<HesitantElement> out;
  if (h.size() <= 1) return out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::vector<Degree> d = h.degrees();
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(std::move(d));
  }
  return out;
}

// Candidates for a space: drop an object, then a parameter, then one
// degree of one cell — only keeping candidates that still validate.
inline std::vector<CoveringSpace> shrink_space(const CoveringSpace& s) {
  std::vector<CoveringSpace> out;
  const HesitantFuzzySoftSet& f = s.soft();
  const Universe& u = *f.universe();
  if (u.size() > 1) {
    for (std::size_t drop = 0; drop < u.size(); ++drop) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < u.size(); ++i)
        if (i != drop) names.push_back(u.name(i));
      UniversePtr nu = make_universe(std::move(names));
      std::vector<HesitantFuzzySet> images;
      for (const auto& img : f.images()) {
        std::vector<HesitantElement> vals;
        for (std::size_t i = 0; i < u.size(); ++i)
          if (i != drop) vals.push_back(img.at(i));
        images.emplace_back(nu, std::move(vals));
      }
      try {
        out.emplace_back(HesitantFuzzySoftSet(nu, f.params(), std::move(images)),
                         s.beta(), s.kind());
      } catch (const HfsError&) {
      }
    }
  }
  if (f.params().size() > 1) {
    for (std::size_t drop = 0; drop < f.params().size(); ++drop) {
      std::vector<std::string> names;
      std::vector<HesitantFuzzySet> images;
      for (std::size_t j = 0; j < f.params().size(); ++j) {
        if (j == drop) continue;
        names.push_back(f.params().name(j));
        images.push_back(f.image(j));
      }
      try {
        out.emplace_back(HesitantFuzzySoftSet(f.universe(), ParameterSet(std::move(names)),
                                              std::move(images)),
                         s.beta(), s.kind());
      } catch (const HfsError&) {
      }
    }
  }
  for (std::size_t j = 0; j < f.params().size(); ++j) {
    for (std::size_t x = 0; x < u.size(); ++x) {
      for (HesitantElement& shorter : [&] { return shrink_element(f.image(j).at(x)); }()) {
        try {
          out.emplace_back(detail_gen::replace_cell(f, j, x, shorter), s.beta(), s.kind());
        } catch (const HfsError&) {
        }
      }
    }
  }
  return out;
}

}  // namespace hfs::laws::gen
