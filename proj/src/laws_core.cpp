#include "hfs/laws.hpp"

#include <algorithm>

#include "laws_build.hpp"

namespace hfs::laws {

std::uint64_t Rng::next() {
  // splitmix64: a fixed, portable stream for a given state.
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t Rng::below(std::size_t n) {
  return static_cast<std::size_t>(next() % n);
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  return lo + below(hi - lo + 1);
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Per-case seed: depends only on the published seed, the law id and the
// case index, so reports survive registry reordering.
std::uint64_t case_seed(std::uint64_t seed, const std::string& id, std::uint64_t idx) {
  std::uint64_t s = seed ^ fnv1a(id);
  s ^= idx * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL;
  return s;
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = [] {
    std::vector<Law> laws;
    detail::register_element_laws(laws);
    detail::register_family_laws(laws);
    detail::register_soft_laws(laws);
    detail::register_neighborhood_laws(laws);
    detail::register_approximation_laws(laws);
    return laws;
  }();
  return registry;
}

bool LawReport::all_passed() const {
  return failed_laws() == 0;
}

std::size_t LawReport::failed_laws() const {
  std::size_t n = 0;
  for (const auto& r : results)
    if (!r.passed()) ++n;
  return n;
}

LawReport run_laws(const std::vector<Law>& registry, std::uint64_t seed,
                   std::uint64_t cases_per_law, const GenBounds& bounds) {
  constexpr std::size_t kMaxReportedFailures = 3;
  LawReport report;
  report.seed = seed;
  report.cases_per_law = cases_per_law;
  report.bounds = bounds;
  for (const auto& law : registry) {
    LawResult result;
    result.id = law.id;
    result.expected = law.expected;
    // Witness laws replay one fixed instance; quantified laws get the
    // full case budget.
    std::uint64_t cases = law.expected == Expect::STRICT_WITNESS ? 1 : cases_per_law;
    result.cases = cases;
    for (std::uint64_t i = 0; i < cases; ++i) {
      Rng rng(case_seed(seed, law.id, i));
      std::string description;
      if (!law.run(rng, bounds, &description)) {
        if (result.failures.size() < kMaxReportedFailures)
          result.failures.push_back({i, description});
      }
    }
    report.results.push_back(std::move(result));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const LawResult& a, const LawResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace hfs::laws
