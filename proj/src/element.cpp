#include "hfs/element.hpp"

#include <algorithm>

#include "hfs/errors.hpp"

namespace hfs {

char kind_letter(InclusionKind kind) {
  switch (kind) {
    case InclusionKind::P: return 'p';
    case InclusionKind::A: return 'a';
    case InclusionKind::M: return 'm';
    case InclusionKind::S: return 's';
    case InclusionKind::T: return 't';
    case InclusionKind::N: return 'n';
  }
  return '?';
}

std::optional<InclusionKind> kind_from_letter(char letter) {
  switch (letter) {
    case 'p': case 'P': return InclusionKind::P;
    case 'a': case 'A': return InclusionKind::A;
    case 'm': case 'M': return InclusionKind::M;
    case 's': case 'S': return InclusionKind::S;
    case 't': case 'T': return InclusionKind::T;
    case 'n': case 'N': return InclusionKind::N;
    default: return std::nullopt;
  }
}

HesitantElement::HesitantElement(std::vector<Degree> degrees)
    : degrees_(std::move(degrees)) {
  if (degrees_.empty())
    throw HfsError("hesitant element must hold at least one degree");
  std::sort(degrees_.begin(), degrees_.end(),
            [](Degree a, Degree b) { return b < a; });
}

Rational HesitantElement::mean() const {
  std::int64_t sum = 0;
  for (Degree d : degrees_) sum += d.ticks();
  return Rational(sum, Degree::kScale * static_cast<std::int64_t>(degrees_.size()));
}

HesitantElement HesitantElement::complement() const {
  std::vector<Degree> out;
  out.reserve(degrees_.size());
  for (Degree d : degrees_) out.push_back(d.complement());
  return HesitantElement(std::move(out));
}

std::string HesitantElement::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ",";
    out += degrees_[i].str();
  }
  out += "}";
  return out;
}

namespace {

// Shared body of union/intersection: concatenate, then keep the degrees
// on the surviving side of the cut.
HesitantElement concat_filtered(const HesitantElement& h1, const HesitantElement& h2,
                                Degree cut, bool keep_at_least) {
  std::vector<Degree> out;
  out.reserve(h1.size() + h2.size());
  auto consider = [&](Degree d) {
    if (keep_at_least ? d >= cut : d <= cut) out.push_back(d);
  };
  for (Degree d : h1.degrees()) consider(d);
  for (Degree d : h2.degrees()) consider(d);
  return HesitantElement(std::move(out));
}

}  // namespace

HesitantElement elem_union(const HesitantElement& h1, const HesitantElement& h2) {
  return concat_filtered(h1, h2, std::max(h1.lower(), h2.lower()), true);
}

HesitantElement elem_intersect(const HesitantElement& h1, const HesitantElement& h2) {
  return concat_filtered(h1, h2, std::min(h1.upper(), h2.upper()), false);
}

bool elem_includes(InclusionKind kind, const HesitantElement& h1,
                   const HesitantElement& h2) {
  switch (kind) {
    case InclusionKind::P:
      return h1.upper() <= h2.upper();
    case InclusionKind::A:
      return h1.upper() <= h2.upper() && h1.lower() <= h2.lower();
    case InclusionKind::M:
      return h1.mean() <= h2.mean();
    case InclusionKind::S: {
      if (h1.size() < h2.size()) return false;
      for (std::size_t i = 0; i < h2.size(); ++i)
        if (h2[i] < h1[i]) return false;
      return true;
    }
    case InclusionKind::T: {
      if (h1.size() >= h2.size()) return false;
      for (std::size_t i = 0; i < h1.size(); ++i)
        if (h2[i] < h1[i]) return false;
      return true;
    }
    case InclusionKind::N:
      return h1.upper() <= h2.lower();
  }
  return false;
}

bool elem_includes_sot(const HesitantElement& h1, const HesitantElement& h2) {
  return elem_includes(InclusionKind::S, h1, h2) ||
         elem_includes(InclusionKind::T, h1, h2);
}

}  // namespace hfs
