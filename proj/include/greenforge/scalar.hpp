#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "greenforge/rational.hpp"

namespace greenforge {

/// Q(zeta_N) together with the data needed to reduce products modulo Phi_N.
struct CyclotomicField {
  int order = 1;
  int degree = 1;
  /// Monic Phi_N, lowest coefficient first (size degree + 1).
  std::vector<long long> phi;
  /// reduction[k] holds x^(degree + k) mod Phi_N, for 0 <= k <= degree - 2.
  std::vector<std::vector<long long>> reduction;
};

/// N-th cyclotomic polynomial, lowest coefficient first.
std::vector<long long> cyclotomic_polynomial(int order);

/// Shared, write-once field table. The returned reference stays valid forever.
const CyclotomicField& cyclotomic_field(int order);

/// An exact scalar: either a plain rational or an element of a cyclotomic
/// field Q(zeta_N), stored as its coefficient vector in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) reduced modulo Phi_N.
///
/// Rationals mix freely with cyclotomics (they embed as constants); two
/// cyclotomic operands must share N.
class Scalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  Scalar() : coeffs_(1) {}
  Scalar(const Rational& r) : coeffs_{r} {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)

  /// zeta_N^k for any integer k.
  static Scalar zeta(int order, long long k);
  /// Element of Q(zeta_N) from an arbitrary-length coefficient list, reduced mod Phi_N.
  static Scalar cyclotomic(int order, std::span<const Rational> coeffs);
  /// The rational r viewed inside Q(zeta_N).
  static Scalar embed(int order, const Rational& r);

  bool is_rational() const { return field_ == nullptr; }
  /// N for cyclotomic values, 0 for the rational variant.
  int order() const { return field_ ? field_->order : 0; }
  std::span<const Rational> coeffs() const { return {coeffs_.data(), coeffs_.size()}; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// this -= c * o, without materialising the product when c * o is zero.
  void sub_mul(const Scalar& c, const Scalar& o);

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3/2" for rationals; "[c0,c1,...]@N" for cyclotomics.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  static const CyclotomicField* common_field(const Scalar& a, const Scalar& b);
  Scalar lifted(const CyclotomicField* field) const;

  const CyclotomicField* field_ = nullptr;
  Coeffs coeffs_;
};

}  // namespace greenforge
