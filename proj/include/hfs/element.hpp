#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hfs/degree.hpp"

namespace hfs {

// The six ways one hesitant element can be contained in another.
enum class InclusionKind { P, A, M, S, T, N };

inline constexpr InclusionKind kAllKinds[] = {
    InclusionKind::P, InclusionKind::A, InclusionKind::M,
    InclusionKind::S, InclusionKind::T, InclusionKind::N};

char kind_letter(InclusionKind kind);                       // 'p'..'n'
std::optional<InclusionKind> kind_from_letter(char letter);  // accepts upper case

// A non-empty multiset of degrees, stored in descending order with
// duplicates preserved.  This is the value H(x) of a hesitant fuzzy set
// at a single object, and doubles as a hesitant fuzzy number when used
// as a threshold.
class HesitantElement {
 public:
  // Sorts the degrees descending; throws HfsError on an empty input.
  explicit HesitantElement(std::vector<Degree> degrees);

  const std::vector<Degree>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  Degree operator[](std::size_t i) const { return degrees_[i]; }

  Degree lower() const { return degrees_.back(); }   // minimum
  Degree upper() const { return degrees_.front(); }  // maximum

  // Arithmetic mean counting duplicates, as an exact rational.
  Rational mean() const;

  HesitantElement complement() const;  // degree-wise 1 - g

  std::string str() const;  // "{0.5,0.4,0.3}"

  friend bool operator==(const HesitantElement& a, const HesitantElement& b) = default;

 private:
  std::vector<Degree> degrees_;
};

inline Degree lower_bound(const HesitantElement& h) { return h.lower(); }
inline Degree upper_bound(const HesitantElement& h) { return h.upper(); }
inline Rational mean(const HesitantElement& h) { return h.mean(); }
inline HesitantElement elem_complement(const HesitantElement& h) { return h.complement(); }

// Multiset union: concatenate both multisets, keep every degree >= the
// larger of the two minima.  Never empty (that maximum itself survives).
HesitantElement elem_union(const HesitantElement& h1, const HesitantElement& h2);

// Multiset intersection: concatenate, keep every degree <= the smaller
// of the two maxima.
HesitantElement elem_intersect(const HesitantElement& h1, const HesitantElement& h2);

// Evaluates h1 c_kind h2 on the descending representations:
//   P: h1.upper <= h2.upper
//   A: h1.upper <= h2.upper and h1.lower <= h2.lower
//   M: mean(h1) <= mean(h2), compared exactly
//   S: |h1| >= |h2| and h2[i] >= h1[i] for i < |h2|
//   T: |h1| <  |h2| and h2[i] >= h1[i] for i < |h1|
//   N: h1.upper <= h2.lower
bool elem_includes(InclusionKind kind, const HesitantElement& h1,
                   const HesitantElement& h2);

// The disjunction "S or T".
bool elem_includes_sot(const HesitantElement& h1, const HesitantElement& h2);

}  // namespace hfs
