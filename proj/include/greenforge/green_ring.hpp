#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "greenforge/comodule.hpp"
#include "greenforge/decomposition.hpp"
#include "greenforge/polynomial.hpp"
#include "greenforge/quiver.hpp"

namespace greenforge {

/// A polynomial handed to a context whose presentation ring differs.
class RingTagMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer combination of classes [V(i,l)]; zero coefficients are dropped.
class GreenElement {
 public:
  using Map = std::map<Indecomposable, long long>;

  GreenElement() = default;
  static GreenElement basis(const Indecomposable& v, long long c = 1);
  static GreenElement from(const Decomposition& d);

  void add(const Indecomposable& v, long long c);
  const Map& terms() const { return terms_; }
  long long coefficient(const Indecomposable& v) const;
  bool is_zero() const { return terms_.empty(); }

  /// Same element with vertices reduced for ctx.
  GreenElement canonical(const QuiverContext& ctx) const;

  GreenElement operator-() const { return scaled(-1); }
  GreenElement& operator+=(const GreenElement& o);
  GreenElement& operator-=(const GreenElement& o);
  friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
  friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }
  GreenElement scaled(long long c) const;
  friend bool operator==(const GreenElement&, const GreenElement&) = default;

  /// Decomposition JSON, but multiplicities may be negative.
  nlohmann::json to_json() const;
  static GreenElement from_json(const nlohmann::json& j);
  /// "[V(0,1)] - 2*[V(1,0)]", or "0".
  std::string str() const;

 private:
  Map terms_;
};

/// Product in the Green ring (tensor product extended bilinearly).
GreenElement gr_mul(const GreenElement& a, const GreenElement& b, const QuiverContext& ctx);
GreenElement gr_pow(const GreenElement& a, long long k, const QuiverContext& ctx);
inline GreenElement green_unit() { return GreenElement::basis({0, 0}); }

/// The presentation ring for ctx, and its x-modulus (n for cyclic, else 0).
RingTag ring_tag_for(const QuiverContext& ctx);
long long x_modulus_for(const QuiverContext& ctx);
/// Order d of q if it is a root of unity other than 1.
std::optional<int> presentation_order(const QuiverContext& ctx);

/// f_k(x,y) by the recursion f_k = y f_(k-1) - x f_(k-2).
PresentedPoly fib2(long long k);
/// f_k(x,y) by the closed sum of (-1)^i C(k-i,i) x^i y^(k-2i).
PresentedPoly fib2_closed(long long k);
/// f_k(x,y,z) for q of order d.
PresentedPoly fib3(long long k, int d);

/// The basis polynomial f_k in the ring of ctx.
PresentedPoly basis_poly(long long k, const QuiverContext& ctx);

/// Sum of c * x^i * f_l over the terms c [V(i,l)].
PresentedPoly to_poly(const GreenElement& a, const QuiverContext& ctx);
/// Reduces p modulo the presentation ideal onto the basis x^i f_k.
GreenElement from_poly(const PresentedPoly& p, const QuiverContext& ctx);
/// Image of p under x -> [V(1,0)], y -> [V(0,1)], z -> [V(0,d)], computed with gr_mul.
GreenElement evaluate(const PresentedPoly& p, const QuiverContext& ctx);

/// Random element with support <= max_support and coefficients in [-max_coeff, max_coeff].
GreenElement random_green_element(std::mt19937_64& rng, const QuiverContext& ctx,
                                  int max_support = 5, long long max_coeff = 3,
                                  long long max_length = 6, long long vertex_window = 3);
PresentedPoly random_poly(std::mt19937_64& rng, const QuiverContext& ctx, int max_terms = 5,
                          long long max_coeff = 3);

struct PresentationCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct PresentationReport {
  std::vector<PresentationCheck> checks;
  bool ok() const;
};

/// Ideal generators vanish under evaluation, and the basis conversions round-trip
/// on `battery` random inputs.
PresentationReport verify_presentation(const QuiverContext& ctx, int battery = 200,
                                       std::uint64_t seed = 0x6772656e);

/// Whether f_i f_(md) = f_(md+i) + sum_{j=1}^{i} x^j f_(md-1) holds in Z[x,y,z].
/// True for i = 1; for i >= 2 the two sides differ by a multiple of (y - x - 1) f_(d-1).
bool fib_identity_check(long long i, long long m, int d);

struct FibIdentityReport {
  bool literal = false;       // the sum form, in Z[x,y,z]
  bool corrected = false;     // f_i f_(md) = f_(md+i) + x f_(i-1) f_(md-1), in Z[x,y,z]
  bool modulo_ideal = false;  // the sum form, modulo (y - x - 1) f_(d-1)
};
FibIdentityReport fib_identity_report(long long i, long long m, int d);
/// Whether f_(d-1) divides f_(md-1) in Z[x,z][y].
bool poly_divides(int d, long long m);

}  // namespace greenforge
