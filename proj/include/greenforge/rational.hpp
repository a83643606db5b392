#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace greenforge {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline and
/// handled with 128-bit intermediates; anything larger is promoted to a shared,
/// immutable GMP rational and demoted again as soon as it fits.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Inline numerator/denominator, when the value is small.
  std::optional<std::pair<long long, long long>> small() const {
    if (big_) return std::nullopt;
    return std::make_pair(num_, den_);
  }

  mpq_class to_mpq() const;
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace greenforge
