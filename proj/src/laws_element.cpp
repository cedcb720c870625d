// Laws over single hesitant elements: canonical form, the Torra-style
// union/intersection/complement algebra, and the six inclusion kinds.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hfs/element.hpp"
#include "hfs/laws.hpp"
#include "lawgen.hpp"
#include "laws_build.hpp"

namespace hfs::laws::detail {

namespace {

using IK = InclusionKind;
using Elems = std::vector<HesitantElement>;

std::string render_elems(const Elems& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += " ";
    out += "h" + std::to_string(i + 1) + "=" + es[i].str();
  }
  return out;
}

std::vector<Elems> tuple_candidates(const Elems& es) {
  std::vector<Elems> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (HesitantElement& s : gen::shrink_element(es[i])) {
      Elems copy = es;
      copy[i] = std::move(s);
      out.push_back(std::move(copy));
    }
  }
  return out;
}

// Evaluates `holds` on the tuple; on failure greedily shrinks the tuple
// (re-running `holds`, so constructive hypotheses stay guarded) and
// renders the minimal failing instance.
bool check(Elems es, const std::function<bool(const Elems&)>& holds, std::string* why) {
  if (holds(es)) return true;
  if (why)
    *why = gen::shrink_and_render<Elems>(std::move(es), holds, &tuple_candidates,
                                         &render_elems);
  return false;
}

Law law(std::string id, std::function<bool(Rng&, const GenBounds&, std::string*)> run) {
  return Law{std::move(id), Expect::HOLDS, std::move(run)};
}

}  // namespace

void register_element_laws(std::vector<Law>& out) {
  // The stored representation is descending and insensitive to the
  // order degrees are supplied in.
  out.push_back(law("elem-canonical-order", [](Rng& rng, const GenBounds& b, std::string* why) {
    HesitantElement h = gen::element(rng, b);
    std::vector<Degree> d = h.degrees();
    for (std::size_t i = d.size(); i > 1; --i) std::swap(d[i - 1], d[rng.below(i)]);
    HesitantElement reshuffled(std::move(d));
    return check({h, reshuffled}, [](const Elems& e) {
      const std::vector<Degree>& v = e[0].degrees();
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
      return e[0] == e[1];
    }, why);
  }));

  // Union: commutative and associative on the nose, and its bounds are
  // the maxima of the operand bounds.
  out.push_back(law("elem-union-props", [](Rng& rng, const GenBounds& b, std::string* why) {
    Elems e{gen::element(rng, b), gen::element(rng, b), gen::element(rng, b)};
    return check(std::move(e), [](const Elems& e) {
      HesitantElement u12 = elem_union(e[0], e[1]);
      if (!(u12 == elem_union(e[1], e[0]))) return false;
      if (!(elem_union(u12, e[2]) == elem_union(e[0], elem_union(e[1], e[2])))) return false;
      return u12.upper() == std::max(e[0].upper(), e[1].upper()) &&
             u12.lower() == std::max(e[0].lower(), e[1].lower());
    }, why);
  }));

  out.push_back(law("elem-intersect-props", [](Rng& rng, const GenBounds& b, std::string* why) {
    Elems e{gen::element(rng, b), gen::element(rng, b), gen::element(rng, b)};
    return check(std::move(e), [](const Elems& e) {
      HesitantElement i12 = elem_intersect(e[0], e[1]);
      if (!(i12 == elem_intersect(e[1], e[0]))) return false;
      if (!(elem_intersect(i12, e[2]) == elem_intersect(e[0], elem_intersect(e[1], e[2]))))
        return false;
      return i12.upper() == std::min(e[0].upper(), e[1].upper()) &&
             i12.lower() == std::min(e[0].lower(), e[1].lower());
    }, why);
  }));

  out.push_back(law("elem-complement-involutive",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    return check({gen::element(rng, b)}, [](const Elems& e) {
      return elem_complement(elem_complement(e[0])) == e[0];
    }, why);
  }));

  out.push_back(law("elem-demorgan", [](Rng& rng, const GenBounds& b, std::string* why) {
    Elems e{gen::element(rng, b), gen::element(rng, b)};
    return check(std::move(e), [](const Elems& e) {
      return elem_complement(elem_intersect(e[0], e[1])) ==
                 elem_union(elem_complement(e[0]), elem_complement(e[1])) &&
             elem_complement(elem_union(e[0], e[1])) ==
                 elem_intersect(elem_complement(e[0]), elem_complement(e[1]));
    }, why);
  }));

  // Each inclusion kind is transitive.  Chains are built constructively;
  // for T the lengths must strictly increase along the chain, so it is
  // grown top-down.
  for (IK k : kAllKinds) {
    out.push_back(law(std::string("elem-transitive-") + kind_letter(k),
                      [k](Rng& rng, const GenBounds& b, std::string* why) {
      Elems e;
      if (k == IK::T) {
        std::size_t l3 = rng.between(3, std::max<std::size_t>(3, b.max_len));
        HesitantElement h3 = gen::element_len(rng, b, l3);
        std::size_t l2 = rng.between(2, l3 - 1);
        std::vector<Degree> d;
        d.reserve(l2);
        for (std::size_t i = 0; i < l2; ++i)
          d.push_back(gen::degree_between(rng, b, kZero, h3[i]));
        HesitantElement h2(std::move(d));
        e.push_back(gen::dominated(rng, b, k, h2));
        e.push_back(std::move(h2));
        e.push_back(std::move(h3));
      } else {
        HesitantElement h1 = gen::element(rng, b);
        HesitantElement h2 = gen::dominating(rng, b, k, h1);
        HesitantElement h3 = gen::dominating(rng, b, k, h2);
        e = {std::move(h1), std::move(h2), std::move(h3)};
      }
      return check(std::move(e), [k](const Elems& e) {
        return !(elem_includes(k, e[0], e[1]) && elem_includes(k, e[1], e[2])) ||
               elem_includes(k, e[0], e[2]);
      }, why);
    }));
  }

  // A implies P; S implies both A and M; T implies P; N implies the
  // pointwise (S-or-T) relation.
  out.push_back(law("elem-implications", [](Rng& rng, const GenBounds& b, std::string* why) {
    HesitantElement h =
        gen::element_len(rng, b, rng.between(1, std::max<std::size_t>(1, b.max_len - 1)));
    Elems e{h, gen::dominating(rng, b, IK::A, h), gen::dominating(rng, b, IK::S, h),
            gen::dominating(rng, b, IK::T, h), gen::dominating(rng, b, IK::N, h)};
    return check(std::move(e), [](const Elems& e) {
      const HesitantElement& h = e[0];
      if (elem_includes(IK::A, h, e[1]) && !elem_includes(IK::P, h, e[1])) return false;
      if (elem_includes(IK::S, h, e[2]) &&
          !(elem_includes(IK::A, h, e[2]) && elem_includes(IK::M, h, e[2])))
        return false;
      if (elem_includes(IK::T, h, e[3]) && !elem_includes(IK::P, h, e[3])) return false;
      if (elem_includes(IK::N, h, e[4]) && !elem_includes_sot(h, e[4])) return false;
      return true;
    }, why);
  }));

  // P/A/M/S are reflexive, T never is (it needs strict length growth),
  // and N holds on the diagonal exactly for flat elements.
  out.push_back(law("elem-self-inclusion", [](Rng& rng, const GenBounds& b, std::string* why) {
    return check({gen::element(rng, b)}, [](const Elems& e) {
      const HesitantElement& h = e[0];
      for (IK k : {IK::P, IK::A, IK::M, IK::S})
        if (!elem_includes(k, h, h)) return false;
      if (elem_includes(IK::T, h, h)) return false;
      return elem_includes(IK::N, h, h) == (h.lower() == h.upper());
    }, why);
  }));

  // Mutual inclusion: S both ways is exactly multiset equality; N both
  // ways forces a single shared value; equality yields P/A/M
  // equivalence.
  out.push_back(law("elem-mutual-inclusion", [](Rng& rng, const GenBounds& b, std::string* why) {
    HesitantElement h1 = gen::element(rng, b);
    Elems e;
    switch (rng.below(3)) {
      case 0:
        e = {h1, h1};
        break;
      case 1:
        e = {h1, gen::element(rng, b)};
        break;
      default: {
        // Flat pair sharing one value, possibly of different lengths.
        Degree v = gen::degree(rng, b);
        std::vector<Degree> d1(rng.between(1, b.max_len), v);
        std::vector<Degree> d2(rng.between(1, b.max_len), v);
        e = {HesitantElement(std::move(d1)), HesitantElement(std::move(d2))};
        break;
      }
    }
    return check(std::move(e), [](const Elems& e) {
      const HesitantElement& h1 = e[0];
      const HesitantElement& h2 = e[1];
      auto both = [&](IK k) {
        return elem_includes(k, h1, h2) && elem_includes(k, h2, h1);
      };
      if ((h1 == h2) && !(both(IK::P) && both(IK::A) && both(IK::M))) return false;
      if (both(IK::S) != (h1 == h2)) return false;
      if (both(IK::N)) {
        if (!(h1.lower() == h1.upper() && h2.lower() == h2.upper() &&
              h1.upper() == h2.upper()))
          return false;
        if (!(both(IK::P) && both(IK::A) && both(IK::M))) return false;
      }
      return true;
    }, why);
  }));

  // Complement reverses inclusion: A and M and N map to themselves, S
  // maps into the pointwise (S-or-T) relation.
  out.push_back(law("elem-complement-antitone",
                    [](Rng& rng, const GenBounds& b, std::string* why) {
    HesitantElement h = gen::element(rng, b);
    Elems e{h, gen::dominating(rng, b, IK::A, h), gen::dominating(rng, b, IK::M, h),
            gen::dominating(rng, b, IK::S, h), gen::dominating(rng, b, IK::N, h)};
    return check(std::move(e), [](const Elems& e) {
      const HesitantElement& h = e[0];
      if (elem_includes(IK::A, h, e[1]) &&
          !elem_includes(IK::A, elem_complement(e[1]), elem_complement(h)))
        return false;
      if (elem_includes(IK::M, h, e[2]) &&
          !elem_includes(IK::M, elem_complement(e[2]), elem_complement(h)))
        return false;
      if (elem_includes(IK::S, h, e[3]) &&
          !elem_includes_sot(elem_complement(e[3]), elem_complement(h)))
        return false;
      if (elem_includes(IK::N, h, e[4]) &&
          !elem_includes(IK::N, elem_complement(e[4]), elem_complement(h)))
        return false;
      return true;
    }, why);
  }));
}

}  // namespace hfs::laws::detail
