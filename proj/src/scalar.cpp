#include "greenforge/scalar.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace greenforge {

namespace {

using Poly = std::vector<long long>;

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const auto dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  Poly quot(num.size() - dn, 0);
  for (auto k = num.size(); k-- > dn;) {
    long long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

Poly compute_phi(int order) {
  Poly p(static_cast<std::size_t>(order) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(order)] = 1;
  for (int m = 1; m < order; ++m) {
    if (order % m == 0) p = divide_monic(p, cyclotomic_polynomial(m));
  }
  return p;
}

CyclotomicField build_field(int order) {
  CyclotomicField f;
  f.order = order;
  f.phi = compute_phi(order);
  f.degree = static_cast<int>(f.phi.size()) - 1;
  const auto deg = static_cast<std::size_t>(f.degree);
  // x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1}); higher powers by shifting.
  Poly cur(deg);
  for (std::size_t j = 0; j < deg; ++j) cur[j] = -f.phi[j];
  for (int k = 0; k + 2 <= f.degree; ++k) {
    f.reduction.push_back(cur);
    Poly next(deg, 0);
    long long top = cur[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) next[j] = cur[j - 1];
    for (std::size_t j = 0; j < deg; ++j) next[j] -= top * f.phi[j];
    cur = std::move(next);
  }
  return f;
}

struct FieldTable {
  std::mutex mutex;
  std::map<int, const CyclotomicField*> index;
  std::deque<CyclotomicField> storage;
};

FieldTable& field_table() {
  static FieldTable table;
  return table;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int order) {
  if (order < 1) throw std::domain_error("cyclotomic order must be positive");
  return cyclotomic_field(order).phi;
}

const CyclotomicField& cyclotomic_field(int order) {
  if (order < 1) throw std::domain_error("cyclotomic order must be positive");
  auto& table = field_table();
  {
    std::lock_guard lock(table.mutex);
    if (auto it = table.index.find(order); it != table.index.end()) return *it->second;
  }
  // Built outside the lock: construction recurses into smaller orders.
  CyclotomicField built = build_field(order);
  std::lock_guard lock(table.mutex);
  if (auto it = table.index.find(order); it != table.index.end()) return *it->second;
  table.storage.push_back(std::move(built));
  table.index.emplace(order, &table.storage.back());
  return table.storage.back();
}

Scalar Scalar::cyclotomic(int order, std::span<const Rational> coeffs) {
  const CyclotomicField& f = cyclotomic_field(order);
  const auto deg = static_cast<std::size_t>(f.degree);
  std::vector<Rational> work(coeffs.begin(), coeffs.end());
  // Reduce from the top, using x^k = x^(k-deg) * (x^deg mod Phi).
  for (auto k = work.size(); k-- > deg;) {
    Rational c = work[k];
    if (c.is_zero()) continue;
    work[k] = Rational();
    for (std::size_t j = 0; j < deg; ++j) {
      if (f.phi[j] != 0) work[k - deg + j] -= c * Rational(f.phi[j]);
    }
  }
  Scalar s;
  s.field_ = &f;
  s.coeffs_.assign(deg, Rational());
  for (std::size_t j = 0; j < deg && j < work.size(); ++j) s.coeffs_[j] = work[j];
  return s;
}

Scalar Scalar::zeta(int order, long long k) {
  long long e = k % order;
  if (e < 0) e += order;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = Rational(1);
  return cyclotomic(order, c);
}

Scalar Scalar::embed(int order, const Rational& r) {
  Rational c[1] = {r};
  return cyclotomic(order, c);
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Scalar::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) return false;
  }
  return true;
}

const CyclotomicField* Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) {
    throw std::domain_error("arithmetic between Q(zeta_" + std::to_string(a.field_->order) +
                            ") and Q(zeta_" + std::to_string(b.field_->order) + ")");
  }
  return a.field_ ? a.field_ : b.field_;
}

Scalar Scalar::lifted(const CyclotomicField* field) const {
  if (field_ == field || field == nullptr) return *this;
  Scalar s;
  s.field_ = field;
  s.coeffs_.assign(static_cast<std::size_t>(field->degree), Rational());
  s.coeffs_[0] = coeffs_[0];
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const CyclotomicField* f = common_field(*this, o);
  if (f && !field_) *this = lifted(f);
  if (o.field_ == field_) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  } else {
    coeffs_[0] += o.coeffs_[0];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  const CyclotomicField* f = common_field(*this, o);
  if (f && !field_) *this = lifted(f);
  if (o.field_ == field_) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  } else {
    coeffs_[0] -= o.coeffs_[0];
  }
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar s = a;
  s += b;
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar s = a;
  s -= b;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  const CyclotomicField* f = Scalar::common_field(a, b);
  if (a.field_ != b.field_) {
    // One side is a plain rational: scale coefficient-wise.
    const Scalar& cyc = a.field_ ? a : b;
    const Rational& r = a.field_ ? b.coeffs_[0] : a.coeffs_[0];
    Scalar s = cyc;
    for (auto& c : s.coeffs_) c *= r;
    return s;
  }
  if (!f) return Scalar(a.coeffs_[0] * b.coeffs_[0]);
  const auto deg = static_cast<std::size_t>(f->degree);
  Scalar::Coeffs prod(deg == 0 ? 1 : 2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Scalar s;
  s.field_ = f;
  s.coeffs_.assign(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
  for (std::size_t k = deg; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& row = f->reduction[k - deg];
    for (std::size_t j = 0; j < deg; ++j) {
      if (row[j] != 0) s.coeffs_[j] += prod[k] * Rational(row[j]);
    }
  }
  return s;
}

void Scalar::sub_mul(const Scalar& c, const Scalar& o) {
  if (c.is_zero() || o.is_zero()) return;
  *this -= c * o;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!field_) return Scalar(coeffs_[0].inverse());
  // Solve (a * b) = 1 via the multiplication-by-a matrix.
  const auto deg = static_cast<std::size_t>(field_->degree);
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
  Scalar basis = Scalar::embed(field_->order, Rational(1));
  const Scalar x = Scalar::zeta(field_->order, 1);
  for (std::size_t col = 0; col < deg; ++col) {
    Scalar image = *this * basis;
    for (std::size_t row = 0; row < deg; ++row) m[row][col] = image.coeffs_[row];
    basis = basis * x;
  }
  m[0][deg] = Rational(1);
  for (std::size_t col = 0; col < deg; ++col) {
    std::size_t piv = col;
    while (m[piv][col].is_zero()) ++piv;
    std::swap(m[piv], m[col]);
    Rational inv = m[col][col].inverse();
    for (auto& v : m[col]) v *= inv;
    for (std::size_t row = 0; row < deg; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational factor = m[row][col];
      for (std::size_t k = col; k <= deg; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  Scalar s;
  s.field_ = field_;
  s.coeffs_.assign(deg, Rational());
  for (std::size_t row = 0; row < deg; ++row) s.coeffs_[row] = m[row][deg];
  return s;
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
  Scalar result = field_ ? Scalar::embed(field_->order, Rational(1)) : Scalar(1);
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const CyclotomicField* f = Scalar::common_field(a, b);
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  return a.lifted(f).coeffs_ == b.lifted(f).coeffs_;
}

std::string Scalar::str() const {
  if (!field_) return coeffs_[0].str();
  std::string out = "[";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += coeffs_[j].str();
  }
  return out + "]@" + std::to_string(field_->order);
}

}  // namespace greenforge
