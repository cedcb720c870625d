#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hfs/errors.hpp"

namespace hfs {

// A membership degree in [0,1], stored exactly as an integer number of
// ticks on a fixed decimal grid.  All comparisons are exact; there is no
// floating point anywhere in the kernel.
class Degree {
 public:
  // Internal resolution: 10^9 ticks per unit, i.e. up to nine decimal
  // digits.  Parse-time precision (below) restricts inputs to a coarser
  // grid but the stored representation is always in these ticks.
  static constexpr std::int64_t kScale = 1'000'000'000;
  static constexpr int kMaxPrecision = 9;

  constexpr Degree() : ticks_(0) {}

  static Degree from_ticks(std::int64_t ticks);

  // Parses a decimal string such as "0.5", ".35", "1", "0.5000".
  // `precision` is the number of fractional digits permitted (the grid
  // denominator is 10^precision); more digits than that is a ParseError,
  // as is anything outside [0,1].
  static Degree parse(std::string_view text, int precision = 4);

  constexpr std::int64_t ticks() const { return ticks_; }

  Degree complement() const { return Degree(kScale - ticks_); }

  // Canonical decimal rendering with trailing zeros stripped: "0.5",
  // "0.35", "1", "0".
  std::string str() const;

  friend constexpr bool operator==(Degree a, Degree b) = default;
  friend constexpr auto operator<=>(Degree a, Degree b) = default;

 private:
  constexpr explicit Degree(std::int64_t ticks) : ticks_(ticks) {}
  std::int64_t ticks_;
};

inline const Degree kZero = Degree::from_ticks(0);
inline const Degree kOne = Degree::from_ticks(Degree::kScale);

// An exact rational number, used for mean values which need not lie on
// the decimal grid (e.g. 17/30).  Always stored reduced with a positive
// denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::string str() const;  // "17/30", or just "7" when integral

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace hfs
