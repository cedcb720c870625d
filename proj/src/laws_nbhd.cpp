// Laws over fuzzy and crisp soft neighborhoods: self-qualification,
// definedness, transitivity, threshold monotonicity, the equivalences
// between neighborhood order and membership, and how the cut commutes
// with unions/intersections of neighborhoods.  Includes the four
// witness laws pinning down which of those exchanges are strict.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hfs/laws.hpp"
#include "hfs/neighborhood.hpp"
#include "lawgen.hpp"
#include "laws_build.hpp"

namespace hfs::laws::detail {

namespace {

using IK = InclusionKind;

bool check_space(CoveringSpace s, const std::function<bool(const CoveringSpace&)>& holds,
                 std::string* why) {
  if (holds(s)) return true;
  if (why)
    *why = gen::shrink_and_render<CoveringSpace>(std::move(s), holds, &gen::shrink_space,
                                                 &gen::space_str);
  return false;
}

Law law(std::string id, std::function<bool(Rng&, const GenBounds&, std::string*)> run) {
  return Law{std::move(id), Expect::HOLDS, std::move(run)};
}

Law witness(std::string id, std::function<bool(Rng&, const GenBounds&, std::string*)> run) {
  return Law{std::move(id), Expect::STRICT_WITNESS, std::move(run)};
}

std::vector<FuzzyNeighborhood> fuzzy_table(const CoveringSpace& s) {
  std::vector<FuzzyNeighborhood> out;
  out.reserve(s.universe()->size());
  for (std::size_t x = 0; x < s.universe()->size(); ++x)
    out.push_back(fuzzy_neighborhood(s, x));
  return out;
}

std::vector<CrispNeighborhood> crisp_table(const CoveringSpace& s) {
  std::vector<CrispNeighborhood> out;
  out.reserve(s.universe()->size());
  for (std::size_t x = 0; x < s.universe()->size(); ++x)
    out.push_back(crisp_neighborhood(s, x));
  return out;
}

HesitantElement elem(std::initializer_list<const char*> degrees) {
  std::vector<Degree> d;
  for (const char* s : degrees) d.push_back(Degree::parse(s));
  return HesitantElement(std::move(d));
}

}  // namespace

void register_neighborhood_laws(std::vector<Law>& out) {
  // Wherever the fuzzy neighborhood exists, the threshold sits inside
  // its value at the base object.  (Not claimed for M or S; a valid
  // one-object M space already breaks it.)
  for (IK k : {IK::P, IK::A, IK::T, IK::N}) {
    out.push_back(law(std::string("nbhd-self-threshold-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::space(rng, b, k), [k](const CoveringSpace& s) {
        for (std::size_t x = 0; x < s.universe()->size(); ++x) {
          FuzzyNeighborhood n = fuzzy_neighborhood(s, x);
          if (n.defined() && !elem_includes(k, s.beta(), n.get().at(x))) return false;
        }
        return true;
      }, why);
    }));
  }

  // Crisp counterpart: every object belongs to its own crisp
  // neighborhood when that neighborhood exists.
  for (IK k : {IK::P, IK::A, IK::T, IK::N}) {
    out.push_back(law(std::string("nbhd-self-member-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::space(rng, b, k), [k](const CoveringSpace& s) {
        for (std::size_t x = 0; x < s.universe()->size(); ++x) {
          CrispNeighborhood n = crisp_neighborhood(s, x);
          if (n.defined() && !obj_contains(n.get(), x)) return false;
        }
        return true;
      }, why);
    }));
  }

  // Under P and N the covering condition itself guarantees a
  // qualifying parameter for every object.
  for (IK k : {IK::P, IK::N}) {
    out.push_back(law(std::string("nbhd-defined-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::space(rng, b, k),
                         [](const CoveringSpace& s) { return all_defined(s); }, why);
    }));
  }

  // Membership chains through fuzzy neighborhoods (P, A, N).
  for (IK k : {IK::P, IK::A, IK::N}) {
    out.push_back(law(std::string("nbhd-fuzzy-transitive-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::space(rng, b, k), [k](const CoveringSpace& s) {
        std::vector<FuzzyNeighborhood> nb = fuzzy_table(s);
        std::size_t n = nb.size();
        for (std::size_t x = 0; x < n; ++x) {
          if (!nb[x].defined()) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if (!nb[y].defined()) continue;
            if (!elem_includes(k, s.beta(), nb[x].get().at(y))) continue;
            for (std::size_t z = 0; z < n; ++z)
              if (elem_includes(k, s.beta(), nb[y].get().at(z)) &&
                  !elem_includes(k, s.beta(), nb[x].get().at(z)))
                return false;
          }
        }
        return true;
      }, why);
    }));
  }

  for (IK k : {IK::P, IK::A, IK::N}) {
    out.push_back(law(std::string("nbhd-crisp-transitive-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::space(rng, b, k), [](const CoveringSpace& s) {
        std::vector<CrispNeighborhood> nb = crisp_table(s);
        std::size_t n = nb.size();
        for (std::size_t x = 0; x < n; ++x) {
          if (!nb[x].defined()) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if (!nb[y].defined() || !obj_contains(nb[x].get(), y)) continue;
            for (std::size_t z = 0; z < n; ++z)
              if (obj_contains(nb[y].get(), z) && !obj_contains(nb[x].get(), z))
                return false;
          }
        }
        return true;
      }, why);
    }));
  }

  // A smaller threshold qualifies more parameters, so it keeps every
  // neighborhood defined and shrinks each one (up to the A order).
  for (IK k : kAllKinds) {
    out.push_back(law(std::string("nbhd-beta-monotone-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      auto [s1, s2] = gen::beta_pair_spaces(rng, b, k);
      bool ok = true;
      for (std::size_t x = 0; ok && x < s2.universe()->size(); ++x) {
        FuzzyNeighborhood n2 = fuzzy_neighborhood(s2, x);
        if (!n2.defined()) continue;
        FuzzyNeighborhood n1 = fuzzy_neighborhood(s1, x);
        ok = n1.defined() && hfs_includes(IK::A, n1.get(), n2.get());
      }
      if (!ok && why) *why = "beta1=" + s1.beta().str() + " " + gen::space_str(s2);
      return ok;
    }));
  }

  // Membership of y in x's cut is exactly neighborhood order, and
  // mutual membership is exactly neighborhood equivalence (P and A).
  for (IK k : {IK::P, IK::A}) {
    out.push_back(law(std::string("nbhd-order-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::defined_space(rng, b, k), [k](const CoveringSpace& s) {
        std::vector<FuzzyNeighborhood> nb = fuzzy_table(s);
        for (std::size_t x = 0; x < nb.size(); ++x) {
          if (!nb[x].defined()) continue;
          for (std::size_t y = 0; y < nb.size(); ++y) {
            if (!nb[y].defined()) continue;
            bool mem_xy = elem_includes(k, s.beta(), nb[x].get().at(y));
            bool mem_yx = elem_includes(k, s.beta(), nb[y].get().at(x));
            if (mem_xy != hfs_includes(k, nb[y].get(), nb[x].get())) return false;
            if ((mem_xy && mem_yx) != hfs_equiv(k, nb[x].get(), nb[y].get())) return false;
          }
        }
        return true;
      }, why);
    }));
  }

  // The N kind only gives the forward direction, and lands in the A
  // order.
  out.push_back(law("nbhd-order-n", [](Rng& rng, const GenBounds& b, std::string* why) {
    return check_space(gen::defined_space(rng, b, IK::N), [](const CoveringSpace& s) {
      std::vector<FuzzyNeighborhood> nb = fuzzy_table(s);
      for (std::size_t x = 0; x < nb.size(); ++x) {
        if (!nb[x].defined()) continue;
        for (std::size_t y = 0; y < nb.size(); ++y) {
          if (!nb[y].defined()) continue;
          if (!elem_includes(IK::N, s.beta(), nb[x].get().at(y))) continue;
          if (!hfs_includes(IK::A, nb[y].get(), nb[x].get())) return false;
          if (elem_includes(IK::N, s.beta(), nb[y].get().at(x)) &&
              !hfs_equiv(IK::A, nb[x].get(), nb[y].get()))
            return false;
        }
      }
      return true;
    }, why);
  }));

  // Same equivalences phrased on the crisp table alone (P and A).
  for (IK k : {IK::P, IK::A}) {
    out.push_back(law(std::string("nbhd-crisp-order-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::defined_space(rng, b, k), [](const CoveringSpace& s) {
        std::vector<CrispNeighborhood> nb = crisp_table(s);
        for (std::size_t x = 0; x < nb.size(); ++x) {
          if (!nb[x].defined()) continue;
          for (std::size_t y = 0; y < nb.size(); ++y) {
            if (!nb[y].defined()) continue;
            bool mem_xy = obj_contains(nb[x].get(), y);
            bool mem_yx = obj_contains(nb[y].get(), x);
            if (mem_xy != obj_subset(nb[y].get(), nb[x].get())) return false;
            if ((mem_xy && mem_yx) != (nb[x].get() == nb[y].get())) return false;
          }
        }
        return true;
      }, why);
    }));
  }

  // Fuzzy neighborhood order and crisp neighborhood containment
  // determine each other (P and A).
  for (IK k : {IK::P, IK::A}) {
    out.push_back(law(std::string("nbhd-bridge-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::defined_space(rng, b, k), [k](const CoveringSpace& s) {
        std::vector<FuzzyNeighborhood> fz = fuzzy_table(s);
        std::vector<CrispNeighborhood> cr = crisp_table(s);
        for (std::size_t x = 0; x < fz.size(); ++x) {
          if (!fz[x].defined()) continue;
          for (std::size_t y = 0; y < fz.size(); ++y) {
            if (!fz[y].defined()) continue;
            if (hfs_includes(k, fz[y].get(), fz[x].get()) !=
                obj_subset(cr[y].get(), cr[x].get()))
              return false;
            if (hfs_equiv(k, fz[x].get(), fz[y].get()) != (cr[x].get() == cr[y].get()))
              return false;
          }
        }
        return true;
      }, why);
    }));
  }

  // How the cut passes through a union/intersection of two
  // neighborhoods: exact for P and N, one-sided where only inclusion
  // survives.
  for (IK k : {IK::P, IK::A, IK::T, IK::N}) {
    out.push_back(law(std::string("nbhd-cut-exchange-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      return check_space(gen::defined_space(rng, b, k), [k](const CoveringSpace& s) {
        std::vector<FuzzyNeighborhood> fz = fuzzy_table(s);
        std::vector<CrispNeighborhood> cr = crisp_table(s);
        for (std::size_t x = 0; x < fz.size(); ++x) {
          if (!fz[x].defined()) continue;
          for (std::size_t y = 0; y < fz.size(); ++y) {
            if (!fz[y].defined()) continue;
            ObjectSet cut_u = beta_cut(s.beta(), k, hfs_union(fz[x].get(), fz[y].get()));
            ObjectSet cut_i = beta_cut(s.beta(), k, hfs_intersect(fz[x].get(), fz[y].get()));
            ObjectSet ju = obj_union(cr[x].get(), cr[y].get());
            ObjectSet mi = obj_intersect(cr[x].get(), cr[y].get());
            switch (k) {
              case IK::P:
              case IK::N:
                if (!(cut_u == ju && cut_i == mi)) return false;
                break;
              case IK::A:
                if (!(obj_subset(ju, cut_u) && cut_i == mi)) return false;
                break;
              default:  // T
                if (!obj_subset(mi, cut_i)) return false;
                break;
            }
          }
        }
        return true;
      }, why);
    }));
  }

  // The same exchange over an arbitrary nonempty collection of
  // neighborhoods.
  for (IK k : {IK::P, IK::A, IK::T, IK::N}) {
    out.push_back(law(std::string("nbhd-cut-fold-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      CoveringSpace s = gen::defined_space(rng, b, k);
      std::size_t n = s.universe()->size();
      std::size_t forced = rng.below(n);
      std::vector<std::size_t> lam;
      for (std::size_t i = 0; i < n; ++i)
        if (i == forced || rng.coin()) lam.push_back(i);
      HfsFamily fam;
      std::optional<ObjectSet> ju, mi;
      for (std::size_t i : lam) {
        FuzzyNeighborhood f = fuzzy_neighborhood(s, i);
        CrispNeighborhood c = crisp_neighborhood(s, i);
        if (!f.defined() || !c.defined()) continue;
        fam.push_back(f.get());
        ju = ju ? obj_union(*ju, c.get()) : c.get();
        mi = mi ? obj_intersect(*mi, c.get()) : c.get();
      }
      if (fam.empty()) return true;
      ObjectSet cut_u = beta_cut(s.beta(), k, family_union(fam));
      ObjectSet cut_i = beta_cut(s.beta(), k, family_intersect(fam));
      bool ok = true;
      switch (k) {
        case IK::P:
        case IK::N:
          ok = cut_u == *ju && cut_i == *mi;
          break;
        case IK::A:
          ok = obj_subset(*ju, cut_u) && cut_i == *mi;
          break;
        default:  // T
          ok = obj_subset(*mi, cut_i);
          break;
      }
      if (!ok && why) {
        *why = gen::space_str(s) + " lambda={";
        for (std::size_t i = 0; i < lam.size(); ++i)
          *why += (i ? "," : "") + s.universe()->name(lam[i]);
        *why += "}";
      }
      return ok;
    }));
  }

  // Strictness witnesses.  Two neighborhood values can jointly clear
  // the threshold under A although neither does alone, so the A-join
  // exchange is one-sided even over finite collections.
  out.push_back(witness("witness-join-a-strict",
                        [](Rng&, const GenBounds&, std::string* why) {
    HesitantElement beta = elem({"0.5", "0.4", "0.3"});
    HesitantElement h1 = elem({"0.5", "0.1"});
    HesitantElement h2 = elem({"0.4", "0.3"});
    bool ok = !elem_includes(IK::A, beta, h1) && !elem_includes(IK::A, beta, h2) &&
              elem_includes(IK::A, beta, elem_union(h1, h2));
    if (!ok && why) *why = "union=" + elem_union(h1, h2).str();
    return ok;
  }));

  // Dually, an intersection can clear the T threshold although neither
  // operand does (both are too short), so the T-meet exchange is
  // one-sided even over finite collections.
  out.push_back(witness("witness-meet-t-strict",
                        [](Rng&, const GenBounds&, std::string* why) {
    HesitantElement beta = elem({"0.5", "0.4", "0.3"});
    HesitantElement h1 = elem({"0.5", "0.3", "0.1"});
    HesitantElement h2 = elem({"0.5", "0.4", "0.1"});
    bool ok = !elem_includes(IK::T, beta, h1) && !elem_includes(IK::T, beta, h2) &&
              elem_includes(IK::T, beta, elem_intersect(h1, h2));
    if (!ok && why) *why = "intersect=" + elem_intersect(h1, h2).str();
    return ok;
  }));

  // For P the join exchange is exact over every finite collection and
  // strict only in the limit: a chain of values climbing towards the
  // threshold's top never reaches it at any finite stage, while the
  // limit value does.
  out.push_back(witness("witness-chain-p-limit",
                        [](Rng&, const GenBounds&, std::string* why) {
    const char* steps[] = {"0",      "0.25",   "0.3333", "0.375",  "0.4",
                           "0.4167", "0.4286", "0.4375", "0.4444", "0.45"};
    HesitantElement beta = elem({"0.5", "0.4", "0.3"});
    std::optional<HesitantElement> acc;
    std::optional<Degree> prev;
    for (const char* s : steps) {
      HesitantElement link = elem({s});
      if (prev && !(*prev < link.upper())) {
        if (why) *why = std::string("chain not strictly increasing at ") + s;
        return false;
      }
      prev = link.upper();
      acc = acc ? elem_union(*acc, link) : link;
      if (elem_includes(IK::P, beta, link) || elem_includes(IK::P, beta, *acc)) {
        if (why) *why = std::string("finite stage already clears the threshold at ") + s;
        return false;
      }
    }
    bool ok = elem_includes(IK::P, beta, elem({"0.5"}));
    if (!ok && why) *why = "limit value does not clear the threshold";
    return ok;
  }));

  // The N analogue: the lower bounds climb towards the threshold's top
  // without reaching it at any finite stage.
  out.push_back(witness("witness-chain-n-limit",
                        [](Rng&, const GenBounds&, std::string* why) {
    const char* steps[] = {"0",      "0.25",   "0.3333", "0.375",  "0.4",
                           "0.4167", "0.4286", "0.4375", "0.4444", "0.45"};
    HesitantElement beta = elem({"0.5", "0.4", "0.3"});
    std::optional<HesitantElement> acc;
    std::optional<Degree> prev;
    for (const char* s : steps) {
      HesitantElement link = elem({s});
      if (prev && !(*prev < link.lower())) {
        if (why) *why = std::string("chain not strictly increasing at ") + s;
        return false;
      }
      prev = link.lower();
      acc = acc ? elem_union(*acc, link) : link;
      if (elem_includes(IK::N, beta, link) || elem_includes(IK::N, beta, *acc)) {
        if (why) *why = std::string("finite stage already clears the threshold at ") + s;
        return false;
      }
    }
    bool ok = elem_includes(IK::N, beta, elem({"0.5"}));
    if (!ok && why) *why = "limit value does not clear the threshold";
    return ok;
  }));
}

}  // namespace hfs::laws::detail
