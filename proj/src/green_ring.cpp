#include "greenforge/green_ring.hpp"

#include <algorithm>
#include <mutex>

#include "greenforge/clebsch_gordan.hpp"

namespace greenforge {

GreenElement GreenElement::basis(const Indecomposable& v, long long c) {
  GreenElement out;
  out.add(v, c);
  return out;
}

GreenElement GreenElement::from(const Decomposition& d) {
  GreenElement out;
  for (const auto& [v, m] : d.summands()) out.add(v, m);
  return out;
}

void GreenElement::add(const Indecomposable& v, long long c) {
  if (v.length < 0) throw std::invalid_argument("negative length in " + to_string(v));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(v, 0);
  if (__builtin_add_overflow(it->second, c, &it->second)) {
    throw std::overflow_error("Green ring coefficient overflow");
  }
  if (it->second == 0) terms_.erase(it);
}

long long GreenElement::coefficient(const Indecomposable& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? 0 : it->second;
}

GreenElement GreenElement::canonical(const QuiverContext& ctx) const {
  GreenElement out;
  for (const auto& [v, c] : terms_) out.add({ctx.vertex(v.vertex), v.length}, c);
  return out;
}

GreenElement& GreenElement::operator+=(const GreenElement& o) {
  for (const auto& [v, c] : o.terms_) add(v, c);
  return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& o) {
  for (const auto& [v, c] : o.terms_) add(v, -c);
  return *this;
}

GreenElement GreenElement::scaled(long long c) const {
  GreenElement out;
  for (const auto& [v, k] : terms_) {
    long long r;
    if (__builtin_mul_overflow(k, c, &r)) throw std::overflow_error("Green ring coefficient overflow");
    out.add(v, r);
  }
  return out;
}

nlohmann::json GreenElement::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [v, c] : terms_) {
    list.push_back({{"vertex", v.vertex}, {"length", v.length}, {"multiplicity", c}});
  }
  return {{"summands", list}};
}

GreenElement GreenElement::from_json(const nlohmann::json& j) {
  GreenElement out;
  for (const auto& s : j.at("summands")) {
    out.add({s.at("vertex").get<long long>(), s.at("length").get<long long>()},
            s.at("multiplicity").get<long long>());
  }
  return out;
}

std::string GreenElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [v, c] : terms_) {
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "[" + to_string(v) + "]";
  }
  return out;
}

GreenElement gr_mul(const GreenElement& a, const GreenElement& b, const QuiverContext& ctx) {
  GreenElement out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      long long c;
      if (__builtin_mul_overflow(cu, cv, &c)) throw std::overflow_error("Green ring coefficient overflow");
      const Decomposition product = decompose_closed(u, v, ctx);
      for (const auto& [w, mult] : product.summands()) {
        long long cw;
        if (__builtin_mul_overflow(c, mult, &cw)) throw std::overflow_error("Green ring coefficient overflow");
        out.add(w, cw);
      }
    }
  }
  return out;
}

GreenElement gr_pow(const GreenElement& a, long long k, const QuiverContext& ctx) {
  if (k < 0) throw std::domain_error("negative power in the Green ring");
  GreenElement out = green_unit();
  for (long long i = 0; i < k; ++i) out = gr_mul(out, a, ctx);
  return out;
}

std::optional<int> presentation_order(const QuiverContext& ctx) {
  auto d = ctx.q().order();
  if (d && *d >= 2) return d;
  return std::nullopt;
}

RingTag ring_tag_for(const QuiverContext& ctx) {
  const bool z = presentation_order(ctx).has_value();
  if (ctx.is_cyclic()) return z ? RingTag::XYZ : RingTag::XY;
  return z ? RingTag::LaurentXYZ : RingTag::LaurentXY;
}

long long x_modulus_for(const QuiverContext& ctx) {
  return ctx.is_cyclic() ? ctx.cycle_order() : 0;
}

namespace {

const PresentedPoly& X() {
  static const PresentedPoly x = PresentedPoly::monomial(RingTag::XYZ, {1, 0, 0});
  return x;
}

const PresentedPoly& Y() {
  static const PresentedPoly y = PresentedPoly::monomial(RingTag::XYZ, {0, 1, 0});
  return y;
}

// Memoized families, computed in Z[x,y,z] and retagged on the way out.
class FibCache {
 public:
  PresentedPoly fib2(long long k) {
    std::lock_guard lock(mutex_);
    auto& seq = two_;
    while (static_cast<long long>(seq.size()) <= k) {
      const auto n = seq.size();
      if (n == 0) {
        seq.push_back(PresentedPoly::constant(RingTag::XYZ, 1));
      } else if (n == 1) {
        seq.push_back(Y());
      } else {
        seq.push_back(Y() * seq[n - 1] - X() * seq[n - 2]);
      }
    }
    return seq[static_cast<std::size_t>(k)];
  }

  PresentedPoly fib3(long long k, int d) {
    std::lock_guard lock(mutex_);
    auto& seq = three_[d];
    const PresentedPoly z = PresentedPoly::monomial(RingTag::XYZ, {0, 0, 1});
    while (static_cast<long long>(seq.size()) <= k) {
      const long long n = static_cast<long long>(seq.size());
      auto f = [&](long long j) -> const PresentedPoly& { return seq[static_cast<std::size_t>(j)]; };
      if (n == 0) {
        seq.push_back(PresentedPoly::constant(RingTag::XYZ, 1));
      } else if (n == 1) {
        seq.push_back(Y());
      } else if (n == d) {
        seq.push_back(z);
      } else if (n % d != 0) {
        seq.push_back(Y() * f(n - 1) - X() * f(n - 2));
      } else {
        const long long m = n / d - 1;
        PresentedPoly next = z * f(m * d) - X() * f(n - 2);
        for (int i = 2; i <= d - 1; ++i) {
          next -= PresentedPoly::monomial(RingTag::XYZ, {i, 0, 0}) * f(m * d - 1);
        }
        next -= PresentedPoly::monomial(RingTag::XYZ, {d, 0, 0}) * f((m - 1) * d);
        seq.push_back(std::move(next));
      }
    }
    return seq[static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mutex_;
  std::vector<PresentedPoly> two_;
  std::map<int, std::vector<PresentedPoly>> three_;
};

FibCache& fib_cache() {
  static FibCache cache;
  return cache;
}

}  // namespace

PresentedPoly fib2(long long k) {
  if (k < 0) throw std::domain_error("fib2 index must be nonnegative");
  return fib_cache().fib2(k).retagged(RingTag::XY, 0);
}

PresentedPoly fib2_closed(long long k) {
  if (k < 0) throw std::domain_error("fib2 index must be nonnegative");
  PresentedPoly out(RingTag::XY);
  for (long long i = 0; 2 * i <= k; ++i) {
    // C(k-i, i) by the multiplicative formula; every prefix product is an integer.
    long long binom = 1;
    for (long long t = 1; t <= i; ++t) binom = binom * (k - i - t + 1) / t;
    out.add_term({i, k - 2 * i, 0}, i % 2 == 0 ? binom : -binom);
  }
  return out;
}

PresentedPoly fib3(long long k, int d) {
  if (k < 0) throw std::domain_error("fib3 index must be nonnegative");
  if (d < 2) throw std::domain_error("fib3 requires d >= 2");
  return fib_cache().fib3(k, d);
}

PresentedPoly basis_poly(long long k, const QuiverContext& ctx) {
  const auto d = presentation_order(ctx);
  const PresentedPoly f = d ? fib3(k, *d) : fib_cache().fib2(k);
  return f.retagged(ring_tag_for(ctx), x_modulus_for(ctx));
}

PresentedPoly to_poly(const GreenElement& a, const QuiverContext& ctx) {
  PresentedPoly out(ring_tag_for(ctx), x_modulus_for(ctx));
  for (const auto& [v, c] : a.terms()) {
    out += basis_poly(v.length, ctx).shifted({v.vertex, 0, 0}).scaled(c);
  }
  return out;
}

namespace {

void require_ring(const PresentedPoly& p, const QuiverContext& ctx) {
  if (p.tag() != ring_tag_for(ctx) || p.x_modulus() != x_modulus_for(ctx)) {
    throw RingTagMismatch("polynomial in " + to_string(p.tag()) +
                          (p.x_modulus() ? "/(x^" + std::to_string(p.x_modulus()) + "-1)" : "") +
                          " does not belong to " + ctx.str());
  }
}

}  // namespace

GreenElement from_poly(const PresentedPoly& p, const QuiverContext& ctx) {
  require_ring(p, ctx);
  const auto d = presentation_order(ctx);
  const RingTag tag = p.tag();
  const long long mod = p.x_modulus();

  long long max_y = 0;
  for (const auto& [m, c] : p.terms()) max_y = std::max(max_y, m.y);
  const long long width = max_y + (d ? *d : 1) + 1;
  const long long height = p.is_zero() ? 0 : p.order().z * width + p.order().y + 1;
  const long long guard = 64 * (height + 1) * (static_cast<long long>(p.terms().size()) + 1) * width;

  std::map<long long, PresentedPoly> basis;
  auto f = [&](long long k) -> const PresentedPoly& {
    auto it = basis.find(k);
    if (it == basis.end()) it = basis.emplace(k, basis_poly(k, ctx)).first;
    return it->second;
  };

  GreenElement out;
  PresentedPoly residue = p;
  long long steps = 0;
  while (!residue.is_zero()) {
    if (++steps > guard) throw std::logic_error("reduction of " + p.str() + " did not terminate");
    const MonomialOrder top = residue.order();
    PresentedPoly lead(tag, mod);
    for (auto it = residue.terms().rbegin(); it != residue.terms().rend(); ++it) {
      if (it->first.z != top.z || it->first.y != top.y) break;
      lead.add_term({it->first.x, 0, 0}, it->second);
    }
    if (!d || top.y <= *d - 1) {
      const long long k = d ? top.z * *d + top.y : top.y;
      residue -= lead * f(k);
      for (const auto& [m, c] : lead.terms()) out.add({m.x, k}, c);
    } else {
      const long long s = top.y - *d + 1;
      PresentedPoly binomial = PresentedPoly::constant(tag, 1, mod);
      const PresentedPoly one_plus_x =
          PresentedPoly::constant(tag, 1, mod) + PresentedPoly::monomial(tag, {1, 0, 0}, 1, mod);
      for (long long t = 0; t < s; ++t) binomial = binomial * one_plus_x;
      const PresentedPoly ideal =
          (PresentedPoly::monomial(tag, {0, s, 0}, 1, mod) - binomial) * f((top.z + 1) * *d - 1);
      residue -= lead * ideal;
    }
  }
  return out.canonical(ctx);
}

GreenElement evaluate(const PresentedPoly& p, const QuiverContext& ctx) {
  require_ring(p, ctx);
  const auto d = presentation_order(ctx);
  const GreenElement y = GreenElement::basis({0, 1});
  const GreenElement z = GreenElement::basis({0, d ? *d : 0});
  std::vector<GreenElement> y_pow{green_unit()};
  std::vector<GreenElement> z_pow{green_unit()};
  auto power = [&](std::vector<GreenElement>& cache, const GreenElement& g, long long e) {
    while (static_cast<long long>(cache.size()) <= e) cache.push_back(gr_mul(cache.back(), g, ctx));
    return cache[static_cast<std::size_t>(e)];
  };

  GreenElement out;
  for (const auto& [m, c] : p.terms()) {
    GreenElement term = gr_mul(power(y_pow, y, m.y), power(z_pow, z, m.z), ctx);
    term = gr_mul(GreenElement::basis({m.x, 0}), term, ctx);
    out += term.scaled(c);
  }
  return out.canonical(ctx);
}

GreenElement random_green_element(std::mt19937_64& rng, const QuiverContext& ctx, int max_support,
                                  long long max_coeff, long long max_length,
                                  long long vertex_window) {
  std::uniform_int_distribution<int> support(0, max_support);
  std::uniform_int_distribution<long long> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<long long> length(0, max_length);
  std::uniform_int_distribution<long long> vertex =
      ctx.is_cyclic() ? std::uniform_int_distribution<long long>(0, ctx.cycle_order() - 1)
                      : std::uniform_int_distribution<long long>(-vertex_window, vertex_window);
  GreenElement out;
  const int n = support(rng);
  for (int k = 0; k < n; ++k) {
    const Indecomposable v{vertex(rng), length(rng)};
    const long long c = coeff(rng);
    out.add(v, c - out.coefficient(v));
  }
  return out;
}

PresentedPoly random_poly(std::mt19937_64& rng, const QuiverContext& ctx, int max_terms,
                          long long max_coeff) {
  const auto d = presentation_order(ctx);
  const RingTag tag = ring_tag_for(ctx);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<long long> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<long long> xexp(is_laurent(tag) ? -3 : 0, 3);
  std::uniform_int_distribution<long long> yexp(0, d ? 2 * *d + 1 : 5);
  std::uniform_int_distribution<long long> zexp(0, d ? 2 : 0);
  PresentedPoly out(tag, x_modulus_for(ctx));
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const Monomial m{xexp(rng), yexp(rng), zexp(rng)};
    out.add_term(m, coeff(rng));
  }
  return out;
}

bool PresentationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

PresentationReport verify_presentation(const QuiverContext& ctx, int battery, std::uint64_t seed) {
  PresentationReport report;
  const RingTag tag = ring_tag_for(ctx);
  const long long mod = x_modulus_for(ctx);
  const auto d = presentation_order(ctx);

  auto generator = [&](const std::string& name, const PresentedPoly& g) {
    const GreenElement image = evaluate(g, ctx);
    report.checks.push_back({name + " maps to 0", image.is_zero(), image.str()});
  };
  if (ctx.is_cyclic()) {
    const GreenElement xn = gr_pow(GreenElement::basis({1, 0}), mod, ctx);
    const GreenElement diff = xn.canonical(ctx) - green_unit();
    report.checks.push_back({"x^" + std::to_string(mod) + " - 1 maps to 0", diff.is_zero(), diff.str()});
  }
  if (d) {
    const PresentedPoly g =
        (PresentedPoly::monomial(tag, {0, 1, 0}, 1, mod) - PresentedPoly::monomial(tag, {1, 0, 0}, 1, mod) -
         PresentedPoly::constant(tag, 1, mod)) *
        basis_poly(*d - 1, ctx);
    generator("(y - x - 1)*f_" + std::to_string(*d - 1), g);
  }

  std::mt19937_64 rng(seed);
  int basis_fail = 0, ideal_fail = 0, hom_fail = 0, eval_fail = 0;
  std::string first_basis, first_ideal, first_hom, first_eval;
  const long long max_len = d ? std::min<long long>(2 * *d + 1, 8) : 6;
  for (int t = 0; t < battery; ++t) {
    const GreenElement a = random_green_element(rng, ctx, 5, 3, max_len).canonical(ctx);
    const GreenElement b = random_green_element(rng, ctx, 3, 3, max_len).canonical(ctx);
    if (from_poly(to_poly(a, ctx), ctx) != a) {
      if (basis_fail++ == 0) first_basis = a.str();
    }
    const PresentedPoly p = random_poly(rng, ctx);
    const GreenElement reduced = from_poly(p, ctx);
    if (!from_poly(to_poly(reduced, ctx) - p, ctx).is_zero()) {
      if (ideal_fail++ == 0) first_ideal = p.str();
    }
    if (evaluate(p, ctx) != reduced) {
      if (eval_fail++ == 0) first_eval = p.str();
    }
    if (from_poly(to_poly(a, ctx) * to_poly(b, ctx), ctx) != gr_mul(a, b, ctx)) {
      if (hom_fail++ == 0) first_hom = a.str() + " * " + b.str();
    }
  }
  const std::string n = std::to_string(battery);
  auto summary = [&](int fails, const std::string& first) {
    return fails == 0 ? n + " cases" : std::to_string(fails) + " failures, first " + first;
  };
  report.checks.push_back({"from_poly(to_poly(a)) = a", basis_fail == 0, summary(basis_fail, first_basis)});
  report.checks.push_back(
      {"to_poly(from_poly(p)) - p lies in the ideal", ideal_fail == 0, summary(ideal_fail, first_ideal)});
  report.checks.push_back(
      {"evaluation agrees with reduction", eval_fail == 0, summary(eval_fail, first_eval)});
  report.checks.push_back(
      {"to_poly is multiplicative", hom_fail == 0, summary(hom_fail, first_hom)});
  return report;
}

namespace {

void check_identity_range(long long i, long long m, int d) {
  if (i < 1 || i > d - 1) throw std::domain_error("fib identity requires 1 <= i <= d-1");
  if (m < 1) throw std::domain_error("fib identity requires m >= 1");
}

PresentedPoly x_power(long long j) { return PresentedPoly::monomial(RingTag::XYZ, {j, 0, 0}); }

}  // namespace

FibIdentityReport fib_identity_report(long long i, long long m, int d) {
  check_identity_range(i, m, d);
  const PresentedPoly lhs = fib3(i, d) * fib3(m * d, d);
  PresentedPoly sum = fib3(m * d + i, d);
  for (long long j = 1; j <= i; ++j) sum += x_power(j) * fib3(m * d - 1, d);
  const PresentedPoly corrected = fib3(m * d + i, d) + x_power(1) * fib3(i - 1, d) * fib3(m * d - 1, d);
  const PresentedPoly generator = PresentedPoly::parse("y - x - 1", RingTag::XYZ) * fib3(d - 1, d);

  FibIdentityReport r;
  r.literal = lhs == sum;
  r.corrected = lhs == corrected;
  r.modulo_ideal = divide_in_y(lhs - sum, generator).remainder.is_zero();
  return r;
}

bool fib_identity_check(long long i, long long m, int d) {
  check_identity_range(i, m, d);
  return fib_identity_report(i, m, d).literal;
}

bool poly_divides(int d, long long m) {
  if (d < 2) throw std::domain_error("poly_divides requires d >= 2");
  if (m < 1) throw std::domain_error("poly_divides requires m >= 1");
  return divide_in_y(fib3(m * d - 1, d), fib3(d - 1, d)).remainder.is_zero();
}

}  // namespace greenforge
