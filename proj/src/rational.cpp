#include "greenforge/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace greenforge {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr long long kMin = std::numeric_limits<long long>::min();
constexpr long long kMax = std::numeric_limits<long long>::max();

u128 abs128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<unsigned long long>(a), static_cast<unsigned long long>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class mpz_from(i128 v) {
  u128 mag = abs128(v);
  auto hi = static_cast<unsigned long long>(mag >> 64);
  auto lo = static_cast<unsigned long long>(mag);
  mpz_class out(static_cast<unsigned long>(hi));
  out <<= 64;
  out += mpz_class(static_cast<unsigned long>(lo));
  if (v < 0) out = -out;
  return out;
}

bool demotable(const mpq_class& q) {
  return mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t());
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  if (demotable(q)) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
  } else {
    mpq_class q(mpz_from(num), mpz_from(den));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_ || num_ == kMin) return Rational(mpq_class(-to_mpq()));
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      long long s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      long long s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    i128 num = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      long long p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_,
                               static_cast<i128>(a.den_) * b.num_);
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  // Both representations are canonical, so a big value never equals a small one.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace greenforge
