#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenforge/rational.hpp"
#include "greenforge/scalar.hpp"

namespace greenforge {

/// The Hopf-structure parameter q, classified by multiplicative order.
///
/// Roots of unity are kept as zeta_d^k with gcd(d, k) = 1 and all scalars built
/// from them live in Q(zeta_d). The rational -1 is stored as zeta_2.
class QSpec {
 public:
  enum class Kind { One, RootOfUnity, GenericRational };

  static QSpec one();
  /// zeta_N^k; rejects exponents that make q = 1.
  static QSpec root_of_unity(int ambient_order, long long exponent);
  /// Any nonzero rational; 1 and -1 are routed to the other variants.
  static QSpec rational(const Rational& value);
  /// "1", "p", "p/q", or "zeta:N:k".
  static QSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Multiplicative order d: 1 for One, nullopt when q is not a root of unity.
  std::optional<int> order() const;
  /// Cyclotomic order of the scalar field (0 means plain rationals).
  int field_order() const { return kind_ == Kind::RootOfUnity ? order_ : 0; }

  Scalar value() const;
  /// q^e for any integer e; exponents are reduced modulo d for roots of unity.
  Scalar power(long long e) const;
  Scalar zero() const;
  Scalar unit() const;
  Scalar from_rational(const Rational& r) const;

  std::string str() const;

  friend bool operator==(const QSpec& a, const QSpec& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_ && a.exponent_ == b.exponent_ &&
           a.rational_ == b.rational_;
  }

 private:
  Kind kind_ = Kind::One;
  int order_ = 1;
  long long exponent_ = 0;
  Rational rational_{1};
  std::vector<Scalar> powers_;  // q^0 .. q^(d-1) for roots of unity
};

/// 1 + q + ... + q^(l-1).
Scalar q_int(long long l, const Scalar& q);

/// Gaussian binomial via the q-Pascal rule C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
/// Throws std::domain_error when bottom > top.
Scalar q_binomial(long long top, long long bottom, const Scalar& q);

/// Row-cached Gaussian binomials for a fixed q.
class GaussianBinomials {
 public:
  explicit GaussianBinomials(Scalar q);
  const Scalar& operator()(long long top, long long bottom);
  const Scalar& q() const { return q_; }

 private:
  void grow(long long top);

  Scalar q_;
  std::vector<Scalar> q_powers_;
  std::vector<std::vector<Scalar>> rows_;
};

/// True iff floor((l+m)/d) - floor(m/d) - floor(l/d) > 0, i.e. the Gaussian
/// binomial C(l+m, l) vanishes at a primitive d-th root of unity.
bool q_binomial_vanishes(long long l, long long m, long long d);

}  // namespace greenforge
