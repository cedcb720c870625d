#include "hfs/degree.hpp"

#include <cctype>
#include <numeric>

namespace hfs {

namespace {

std::int64_t pow10(int n) {
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i) v *= 10;
  return v;
}

}  // namespace

Degree Degree::from_ticks(std::int64_t ticks) {
  if (ticks < 0 || ticks > kScale)
    throw HfsError("degree out of range [0,1]");
  return Degree(ticks);
}

Degree Degree::parse(std::string_view text, int precision) {
  if (precision < 0 || precision > kMaxPrecision)
    throw ParseError("precision must be between 0 and 9");
  if (text.empty()) throw ParseError("empty degree string");

  std::size_t i = 0;
  std::int64_t whole = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    whole = whole * 10 + (text[i] - '0');
    if (whole > 1) throw ParseError("degree above 1: '" + std::string(text) + "'");
    any_digit = true;
    ++i;
  }

  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac = frac * 10 + (text[i] - '0');
      ++frac_digits;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit || i != text.size())
    throw ParseError("malformed degree: '" + std::string(text) + "'");
  // "0.5000" is fine at precision 4 but "0.12345" is not: strip trailing
  // zeros before measuring against the grid.
  while (frac_digits > 0 && frac % 10 == 0) {
    frac /= 10;
    --frac_digits;
  }
  if (frac_digits > precision)
    throw ParseError("degree '" + std::string(text) + "' has more than " +
                     std::to_string(precision) + " fractional digits");

  std::int64_t ticks = whole * kScale + frac * pow10(kMaxPrecision - frac_digits);
  if (ticks > kScale)
    throw ParseError("degree above 1: '" + std::string(text) + "'");
  return Degree(ticks);
}

std::string Degree::str() const {
  std::int64_t whole = ticks_ / kScale;
  std::int64_t frac = ticks_ % kScale;
  if (frac == 0) return std::to_string(whole);
  std::string digits(static_cast<std::size_t>(kMaxPrecision), '0');
  for (int pos = kMaxPrecision - 1; pos >= 0; --pos) {
    digits[static_cast<std::size_t>(pos)] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  while (digits.back() == '0') digits.pop_back();
  return std::to_string(whole) + "." + digits;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw HfsError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Cross-multiply in 128 bits; denominators are positive.
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hfs
