#include "greenforge/qcombinatorics.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace greenforge {

namespace {

long long parse_int(std::string_view text, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

QSpec QSpec::one() { return QSpec(); }

QSpec QSpec::root_of_unity(int ambient_order, long long exponent) {
  if (ambient_order < 1) throw std::invalid_argument("root of unity needs a positive order");
  long long k = exponent % ambient_order;
  if (k < 0) k += ambient_order;
  long long g = std::gcd(static_cast<long long>(ambient_order), k);
  int d = static_cast<int>(ambient_order / g);
  if (d == 1) throw std::invalid_argument("zeta:N:k with N/gcd(N,k) = 1 is q = 1; use \"1\"");
  QSpec q;
  q.kind_ = Kind::RootOfUnity;
  q.order_ = d;
  q.exponent_ = k / g;
  q.rational_ = Rational(0);
  for (int e = 0; e < d; ++e) q.powers_.push_back(Scalar::zeta(d, q.exponent_ * e));
  return q;
}

QSpec QSpec::rational(const Rational& value) {
  if (value.is_zero()) throw std::invalid_argument("q must be nonzero");
  if (value == Rational(1)) return one();
  if (value == Rational(-1)) return root_of_unity(2, 1);
  QSpec q;
  q.kind_ = Kind::GenericRational;
  q.order_ = 0;
  q.rational_ = value;
  return q;
}

QSpec QSpec::parse(std::string_view text) {
  if (text.starts_with("zeta:")) {
    auto rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("expected zeta:N:k, got '" + std::string(text) + "'");
    }
    long long n = parse_int(rest.substr(0, colon), "root-of-unity order");
    long long k = parse_int(rest.substr(colon + 1), "root-of-unity exponent");
    if (n < 1 || n > 1'000'000) throw std::invalid_argument("root-of-unity order out of range");
    return root_of_unity(static_cast<int>(n), k);
  }
  return rational(Rational::parse(text));
}

std::optional<int> QSpec::order() const {
  switch (kind_) {
    case Kind::One:
      return 1;
    case Kind::RootOfUnity:
      return order_;
    case Kind::GenericRational:
      return std::nullopt;
  }
  return std::nullopt;
}

Scalar QSpec::value() const { return power(1); }

Scalar QSpec::power(long long e) const {
  switch (kind_) {
    case Kind::One:
      return Scalar(1);
    case Kind::RootOfUnity: {
      long long r = e % order_;
      if (r < 0) r += order_;
      return powers_[static_cast<std::size_t>(r)];
    }
    case Kind::GenericRational:
      return Scalar(rational_).pow(e);
  }
  return Scalar(1);
}

Scalar QSpec::zero() const { return from_rational(Rational(0)); }
Scalar QSpec::unit() const { return from_rational(Rational(1)); }

Scalar QSpec::from_rational(const Rational& r) const {
  if (kind_ == Kind::RootOfUnity) return Scalar::embed(order_, r);
  return Scalar(r);
}

std::string QSpec::str() const {
  switch (kind_) {
    case Kind::One:
      return "1";
    case Kind::RootOfUnity:
      return "zeta:" + std::to_string(order_) + ":" + std::to_string(exponent_);
    case Kind::GenericRational:
      return rational_.str();
  }
  return "?";
}

Scalar q_int(long long l, const Scalar& q) {
  if (l < 0) throw std::domain_error("q_int of a negative integer");
  Scalar one = q.is_rational() ? Scalar(1) : Scalar::embed(q.order(), Rational(1));
  Scalar sum = one - one;
  Scalar power = one;
  for (long long k = 0; k < l; ++k) {
    sum += power;
    power = power * q;
  }
  return sum;
}

Scalar q_binomial(long long top, long long bottom, const Scalar& q) {
  if (bottom < 0 || top < 0 || bottom > top) {
    throw std::domain_error("q_binomial(" + std::to_string(top) + ", " + std::to_string(bottom) +
                            ") is outside 0 <= bottom <= top");
  }
  GaussianBinomials table(q);
  return table(top, bottom);
}

GaussianBinomials::GaussianBinomials(Scalar q) : q_(std::move(q)) {
  Scalar one = q_.is_rational() ? Scalar(1) : Scalar::embed(q_.order(), Rational(1));
  q_powers_.push_back(one);
  rows_.push_back({one});
}

void GaussianBinomials::grow(long long top) {
  while (static_cast<long long>(rows_.size()) <= top) {
    const auto n = rows_.size();
    while (q_powers_.size() <= n) q_powers_.push_back(q_powers_.back() * q_);
    const auto& prev = rows_.back();
    std::vector<Scalar> row(n + 1);
    row[0] = q_powers_[0];
    row[n] = q_powers_[0];
    for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + q_powers_[k] * prev[k];
    rows_.push_back(std::move(row));
  }
}

const Scalar& GaussianBinomials::operator()(long long top, long long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) {
    throw std::domain_error("q_binomial(" + std::to_string(top) + ", " + std::to_string(bottom) +
                            ") is outside 0 <= bottom <= top");
  }
  grow(top);
  return rows_[static_cast<std::size_t>(top)][static_cast<std::size_t>(bottom)];
}

bool q_binomial_vanishes(long long l, long long m, long long d) {
  if (d < 2) throw std::domain_error("vanishing criterion needs d >= 2");
  if (l < 0 || m < 0) throw std::domain_error("vanishing criterion needs l, m >= 0");
  return (l + m) / d - m / d - l / d > 0;
}

}  // namespace greenforge
