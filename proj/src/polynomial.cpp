#include "greenforge/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace greenforge {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

std::string to_string(RingTag tag) {
  switch (tag) {
    case RingTag::XY:
      return "Z[x,y]";
    case RingTag::XYZ:
      return "Z[x,y,z]";
    case RingTag::LaurentXY:
      return "Z[x,x^-1,y]";
    case RingTag::LaurentXYZ:
      return "Z[x,x^-1,y,z]";
  }
  return "?";
}

PresentedPoly PresentedPoly::constant(RingTag tag, long long c, long long x_modulus) {
  return monomial(tag, {}, c, x_modulus);
}

PresentedPoly PresentedPoly::monomial(RingTag tag, Monomial mono, long long c, long long x_modulus) {
  PresentedPoly p(tag, x_modulus);
  p.add_term(mono, c);
  return p;
}

long long PresentedPoly::reduce_x(long long e) const {
  if (modulus_ <= 0) return e;
  long long r = e % modulus_;
  return r < 0 ? r + modulus_ : r;
}

void PresentedPoly::check_exponents(const Monomial& m) const {
  if (m.y < 0 || m.z < 0) throw std::domain_error("negative y or z exponent");
  if (m.z != 0 && !has_z(tag_)) throw std::domain_error("z does not occur in " + to_string(tag_));
  if (m.x < 0 && !is_laurent(tag_)) {
    throw std::domain_error("negative x exponent in " + to_string(tag_));
  }
}

long long PresentedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void PresentedPoly::add_term(Monomial mono, long long c) {
  if (c == 0) return;
  mono.x = reduce_x(mono.x);
  check_exponents(mono);
  auto [it, inserted] = terms_.try_emplace(mono, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

MonomialOrder PresentedPoly::order() const {
  if (terms_.empty()) throw std::domain_error("order of the zero polynomial");
  const Monomial& top = terms_.rbegin()->first;
  return {top.z, top.y};
}

PresentedPoly PresentedPoly::operator-() const { return scaled(-1); }

PresentedPoly& PresentedPoly::operator+=(const PresentedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PresentedPoly& PresentedPoly::operator-=(const PresentedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

PresentedPoly operator*(const PresentedPoly& a, const PresentedPoly& b) {
  if (a.tag_ != b.tag_ || a.modulus_ != b.modulus_) {
    throw std::domain_error("product of polynomials from different rings");
  }
  PresentedPoly out(a.tag_, a.modulus_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.x + mb.x, ma.y + mb.y, ma.z + mb.z}, checked_mul(ca, cb));
    }
  }
  return out;
}

PresentedPoly PresentedPoly::scaled(long long c) const {
  PresentedPoly out(tag_, modulus_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, checked_mul(v, c));
  return out;
}

PresentedPoly PresentedPoly::shifted(const Monomial& by) const {
  PresentedPoly out(tag_, modulus_);
  for (const auto& [m, v] : terms_) out.add_term({m.x + by.x, m.y + by.y, m.z + by.z}, v);
  return out;
}

PresentedPoly PresentedPoly::retagged(RingTag tag, long long x_modulus) const {
  PresentedPoly out(tag, x_modulus);
  for (const auto& [m, v] : terms_) out.add_term(m, v);
  return out;
}

std::string PresentedPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string factors;
    auto factor = [&](const char* name, long long e) {
      if (e == 0) return;
      if (!factors.empty()) factors += '*';
      factors += name;
      if (e != 1) factors += "^" + std::to_string(e);
    };
    factor("x", m.x);
    factor("y", m.y);
    factor("z", m.z);
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (factors.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += factors;
    }
  }
  return out;
}

PresentedPoly PresentedPoly::parse(std::string_view text, RingTag tag, long long x_modulus) {
  PresentedPoly out(tag, x_modulus);
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](long long& v) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    auto [p, ec] = std::from_chars(s.data() + start + (s[start] == '+' ? 1 : 0), s.data() + pos, v);
    if (ec != std::errc() || p != s.data() + pos) fail("bad integer");
  };
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    long long coeff = 1;
    Monomial mono;
    bool first = true;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (!first) {
        if (s[pos] != '*') fail("expected '*'");
        ++pos;
      }
      first = false;
      if (pos >= s.size()) fail("dangling '*'");
      char ch = s[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        long long v;
        read_int(v);
        coeff = checked_mul(coeff, v);
        continue;
      }
      if (ch != 'x' && ch != 'y' && ch != 'z') fail(std::string("unknown symbol '") + ch + "'");
      ++pos;
      long long e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        read_int(e);
      }
      (ch == 'x' ? mono.x : ch == 'y' ? mono.y : mono.z) += e;
    }
    if (first) fail("empty term");
    out.add_term(mono, checked_mul(sign, coeff));
  }
  return out;
}

DivisionResult divide_in_y(const PresentedPoly& num, const PresentedPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  long long den_deg = 0;
  for (const auto& [m, c] : den.terms()) den_deg = std::max(den_deg, m.y);
  for (const auto& [m, c] : den.terms()) {
    if (m.y == den_deg && (m.x != 0 || m.z != 0 || c != 1)) {
      throw std::domain_error("divisor is not monic in y");
    }
  }
  DivisionResult out{PresentedPoly(num.tag(), num.x_modulus()), num};
  while (!out.remainder.is_zero()) {
    long long deg = 0;
    for (const auto& [m, c] : out.remainder.terms()) deg = std::max(deg, m.y);
    if (deg < den_deg) break;
    PresentedPoly lead(num.tag(), num.x_modulus());
    for (const auto& [m, c] : out.remainder.terms()) {
      if (m.y == deg) lead.add_term({m.x, deg - den_deg, m.z}, c);
    }
    out.quotient += lead;
    out.remainder -= lead * den.retagged(num.tag(), num.x_modulus());
  }
  return out;
}

}  // namespace greenforge
