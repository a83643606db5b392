#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace greenforge {

/// Which presentation ring a polynomial lives in.
enum class RingTag { XY, XYZ, LaurentXY, LaurentXYZ };

std::string to_string(RingTag tag);
inline bool has_z(RingTag t) { return t == RingTag::XYZ || t == RingTag::LaurentXYZ; }
inline bool is_laurent(RingTag t) { return t == RingTag::LaurentXY || t == RingTag::LaurentXYZ; }

/// x^x y^y z^z. Ordered by (z, y, x) so that terms of equal MonomialOrder
/// (z, y) are adjacent and the highest-order group comes last.
struct Monomial {
  long long x = 0;
  long long y = 0;
  long long z = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// The order of x^i y^l z^m is (m, l), compared lexicographically.
struct MonomialOrder {
  long long z = 0;
  long long y = 0;

  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Integer polynomial in x (possibly Laurent), y and optionally z, with an
/// optional relation x^modulus = 1. Zero coefficients are never stored.
class PresentedPoly {
 public:
  using Terms = std::map<Monomial, long long>;

  explicit PresentedPoly(RingTag tag = RingTag::XY, long long x_modulus = 0)
      : tag_(tag), modulus_(x_modulus) {}

  static PresentedPoly constant(RingTag tag, long long c, long long x_modulus = 0);
  static PresentedPoly monomial(RingTag tag, Monomial mono, long long c = 1,
                                long long x_modulus = 0);
  /// Parses sums of terms such as "3*x^2*y - x^-1*z + 4".
  static PresentedPoly parse(std::string_view text, RingTag tag, long long x_modulus = 0);

  RingTag tag() const { return tag_; }
  long long x_modulus() const { return modulus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const Monomial& m) const;

  void add_term(Monomial mono, long long c);

  /// Highest MonomialOrder present; requires a nonzero polynomial.
  MonomialOrder order() const;

  PresentedPoly operator-() const;
  PresentedPoly& operator+=(const PresentedPoly& o);
  PresentedPoly& operator-=(const PresentedPoly& o);
  friend PresentedPoly operator+(PresentedPoly a, const PresentedPoly& b) { return a += b; }
  friend PresentedPoly operator-(PresentedPoly a, const PresentedPoly& b) { return a -= b; }
  friend PresentedPoly operator*(const PresentedPoly& a, const PresentedPoly& b);
  PresentedPoly scaled(long long c) const;
  PresentedPoly shifted(const Monomial& by) const;

  friend bool operator==(const PresentedPoly& a, const PresentedPoly& b) {
    return a.tag_ == b.tag_ && a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

  /// Same polynomial viewed in another ring (checks the exponents fit).
  PresentedPoly retagged(RingTag tag, long long x_modulus) const;

  /// Canonical text, highest order first: "x^2*y^3 - 2*x^3*y".
  std::string str() const;

 private:
  long long reduce_x(long long e) const;
  void check_exponents(const Monomial& m) const;

  RingTag tag_;
  long long modulus_;
  Terms terms_;
};

struct DivisionResult {
  PresentedPoly quotient;
  PresentedPoly remainder;
};

/// Division in y over coefficients in Z[x^(+-1), z] by a divisor whose leading
/// y-coefficient is 1.
DivisionResult divide_in_y(const PresentedPoly& num, const PresentedPoly& den);

}  // namespace greenforge
