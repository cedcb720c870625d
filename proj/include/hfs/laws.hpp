#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hfs/approx.hpp"

namespace hfs::laws {

// Deterministic splitmix64 stream.  Implemented here rather than with
// <random> adaptors because reports must be byte-identical across
// platforms and standard-library versions for a published seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  // Uniform in [lo, hi], inclusive.
  std::size_t between(std::size_t lo, std::size_t hi);
  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

// Size limits for generated instances.  Degrees are drawn from the grid
// of multiples of 10^-grid_digits.
struct GenBounds {
  std::size_t max_objects = 5;
  std::size_t max_params = 4;
  std::size_t max_len = 5;
  int grid_digits = 1;
};

// HOLDS laws are quantified statements checked on generated instances.
// STRICT_WITNESS laws replay a fixed counterexample and must exhibit the
// strict (one-sided) behaviour it was constructed for.
enum class Expect { HOLDS, STRICT_WITNESS };

struct Law {
  std::string id;
  Expect expected;
  // Runs one case; returns true on pass, otherwise fills *description
  // with a rendering of the (shrunk) failing instance.
  std::function<bool(Rng&, const GenBounds&, std::string* description)> run;
};

// Every proposition of the underlying algebra, one law each.
const std::vector<Law>& law_registry();

struct CaseFailure {
  std::uint64_t case_index;
  std::string description;
};

struct LawResult {
  std::string id;
  Expect expected;
  std::uint64_t cases;
  std::vector<CaseFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct LawReport {
  std::uint64_t seed = 0;
  std::uint64_t cases_per_law = 0;
  GenBounds bounds;
  std::vector<LawResult> results;

  bool all_passed() const;
  std::size_t failed_laws() const;
};

// Evaluates each HOLDS law on cases_per_law cases and each witness law
// once.  Per-case randomness depends only on (seed, law id, case index),
// so reports are stable under registry reordering.
LawReport run_laws(const std::vector<Law>& registry, std::uint64_t seed,
                   std::uint64_t cases_per_law, const GenBounds& bounds);

}  // namespace hfs::laws
