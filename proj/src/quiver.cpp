#include "greenforge/quiver.hpp"

#include <stdexcept>

namespace greenforge {

QuiverContext QuiverContext::cyclic(int n, QSpec q) {
  if (n < 1) throw std::invalid_argument("cyclic quiver needs n >= 1");
  auto d = q.order();
  if (!d || n % *d != 0) {
    throw std::invalid_argument("cyclic quiver of order " + std::to_string(n) +
                                " needs q^n = 1, got q = " + q.str());
  }
  return QuiverContext(n, std::move(q));
}

QuiverContext QuiverContext::infinite(QSpec q) { return QuiverContext(0, std::move(q)); }

long long QuiverContext::vertex(long long v) const {
  if (n_ == 0) return v;
  long long r = v % n_;
  return r < 0 ? r + n_ : r;
}

std::string QuiverContext::str() const {
  return (n_ > 0 ? "cyclic(" + std::to_string(n_) + ")" : std::string("infinite")) +
         ", q=" + q_.str();
}

std::string to_string(const PathIndex& p) {
  return "p_" + std::to_string(p.source) + "^" + std::to_string(p.length);
}

ScaledPath path_mul(const PathIndex& p, const PathIndex& r, const QuiverContext& ctx) {
  const QSpec& q = ctx.q();
  Scalar coeff = q.power(p.source * r.length) * q_binomial(p.length + r.length, p.length, q.value());
  return {std::move(coeff), PathIndex{ctx.vertex(p.source + r.source), p.length + r.length}};
}

std::vector<std::pair<PathIndex, PathIndex>> coproduct(const PathIndex& p,
                                                       const QuiverContext& ctx) {
  std::vector<std::pair<PathIndex, PathIndex>> out;
  out.reserve(static_cast<std::size_t>(p.length) + 1);
  for (long long k = 0; k <= p.length; ++k) {
    out.emplace_back(PathIndex{ctx.vertex(p.source + k), p.length - k},
                     PathIndex{ctx.vertex(p.source), k});
  }
  return out;
}

PathCombination single_path(const PathIndex& p, const QuiverContext& ctx,
                            const Scalar& coefficient) {
  PathCombination out;
  if (!coefficient.is_zero()) out.emplace(PathIndex{ctx.vertex(p.source), p.length}, coefficient);
  return out;
}

PathCombination multiply(const PathCombination& a, const PathCombination& b,
                         const QuiverContext& ctx) {
  PathCombination out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      ScaledPath prod = path_mul(pa, pb, ctx);
      if (prod.coefficient.is_zero()) continue;
      auto [it, inserted] = out.try_emplace(prod.path, ctx.q().zero());
      it->second += ca * cb * prod.coefficient;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

PathCombination scale(const PathCombination& a, const Scalar& c) {
  PathCombination out;
  for (const auto& [p, v] : a) {
    Scalar s = v * c;
    if (!s.is_zero()) out.emplace(p, std::move(s));
  }
  return out;
}

namespace {

bool same(const PathCombination& a, const PathCombination& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

PathCombination power(const PathCombination& x, long long k, const QuiverContext& ctx) {
  PathCombination out = single_path({0, 0}, ctx, ctx.q().unit());
  for (long long i = 0; i < k; ++i) out = multiply(out, x, ctx);
  return out;
}

}  // namespace

std::vector<RelationCheck> check_presentation(const QuiverContext& ctx) {
  const QSpec& q = ctx.q();
  const Scalar one = q.unit();
  const std::string arrow = ctx.is_cyclic() ? "a_0" : "e_0";
  const PathCombination unit = single_path({0, 0}, ctx, one);
  const PathCombination g = single_path({1, 0}, ctx, one);
  const PathCombination a0 = single_path({0, 1}, ctx, one);

  std::vector<RelationCheck> out;
  auto check = [&](std::string name, const PathCombination& lhs, const PathCombination& rhs) {
    out.push_back({std::move(name), same(lhs, rhs)});
  };

  if (ctx.is_cyclic()) {
    const int n = ctx.cycle_order();
    check("g^" + std::to_string(n) + " = 1", power(g, n, ctx), unit);
  } else {
    const PathCombination g_inv = single_path({-1, 0}, ctx, one);
    check("g g^-1 = 1", multiply(g, g_inv, ctx), unit);
    check("g^-1 g = 1", multiply(g_inv, g, ctx), unit);
  }

  const auto d = q.order();
  if (q.kind() == QSpec::Kind::One) {
    check("g " + arrow + " = " + arrow + " g", multiply(g, a0, ctx), multiply(a0, g, ctx));
  } else {
    check("g " + arrow + " = q " + arrow + " g", multiply(g, a0, ctx),
          scale(multiply(a0, g, ctx), q.value()));
  }
  if (q.kind() == QSpec::Kind::RootOfUnity) {
    const std::string ds = std::to_string(*d);
    const PathCombination pd = single_path({0, *d}, ctx, one);
    check(arrow + "^" + ds + " = 0", power(a0, *d, ctx), PathCombination{});
    check(arrow + " p_0^" + ds + " = p_0^" + ds + " " + arrow, multiply(a0, pd, ctx),
          multiply(pd, a0, ctx));
    check("g p_0^" + ds + " = p_0^" + ds + " g", multiply(g, pd, ctx), multiply(pd, g, ctx));
  }
  return out;
}

}  // namespace greenforge
