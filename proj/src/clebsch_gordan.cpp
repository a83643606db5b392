#include "greenforge/clebsch_gordan.hpp"

#include <algorithm>

namespace greenforge {

NormalizedPair normalize_pair(const Indecomposable& a, const Indecomposable& b,
                              const QuiverContext& ctx) {
  return {ctx.vertex(a.vertex + b.vertex), std::min(a.length, b.length),
          std::max(a.length, b.length)};
}

std::string to_string(CGRule rule) {
  switch (rule) {
    case CGRule::Classical:
      return "classical";
    case CGRule::Case1:
      return "case1";
    case CGRule::Case2:
      return "case2";
    case CGRule::Case3:
      return "case3";
    case CGRule::Case4:
      return "case4";
  }
  return "?";
}

CGCase classify(long long left, long long right, const QuiverContext& ctx) {
  CGCase c;
  const auto d = ctx.q().order();
  if (!d || *d == 1) return c;
  c.d = *d;
  c.e = left / c.d;
  c.f = left % c.d;
  c.m = right / c.d;
  c.h = right % c.d;
  c.gamma = c.f + c.h - c.d + 1;
  const bool low = c.f + c.h < c.d - 1;
  if (c.f <= c.h) {
    c.rule = low ? CGRule::Case1 : CGRule::Case2;
  } else {
    c.rule = low ? CGRule::Case3 : CGRule::Case4;
  }
  return c;
}

namespace {

class Emitter {
 public:
  Emitter(const QuiverContext& ctx, long long shift) : ctx_(ctx), shift_(shift) {}

  void operator()(long long vertex, long long length) {
    if (length < 0) {
      throw FormulaError("closed form produced V(" + std::to_string(vertex) + "," +
                         std::to_string(length) + ")");
    }
    out_.add({ctx_.vertex(vertex + shift_), length});
  }

  /// Emits V(base + r, length(r)) for r in [from, to]; empty when from > to.
  template <typename F>
  void range(long long base, long long from, long long to, F length) {
    for (long long r = from; r <= to; ++r) (*this)(base + r, length(r));
  }

  Decomposition take() { return std::move(out_); }

 private:
  const QuiverContext& ctx_;
  long long shift_;
  Decomposition out_;
};

void classical(Emitter& emit, long long left, long long right) {
  emit.range(0, 0, left, [&](long long i) { return left + right - 2 * i; });
}

void root_of_unity(Emitter& emit, const CGCase& c) {
  const long long d = c.d, e = c.e, f = c.f, m = c.m, h = c.h, g = c.gamma;
  const long long fh = f + h;
  if (c.rule == CGRule::Case3 && e >= m) {
    throw FormulaError("case 3 requires e < m after normalisation");
  }

  for (long long k = 0; k < e; ++k) {
    const long long base = k * d;
    const long long top = (e + m - 2 * k) * d;
    switch (c.rule) {
      case CGRule::Case1:
        emit.range(base, 0, f, [&](long long i) { return top + fh - 2 * i; });
        emit.range(base, f + 1, h, [&](long long) { return top - 1; });
        emit.range(base, h + 1, fh + 1, [&](long long r) { return top + fh - 2 * r; });
        emit.range(base, fh + 2, d - 1, [&](long long) { return top - d - 1; });
        break;
      case CGRule::Case2:
        emit.range(base, 0, g, [&](long long) { return top + d - 1; });
        emit.range(base, g + 1, f, [&](long long j) { return top + fh - 2 * j; });
        emit.range(base, f + 1, h, [&](long long) { return top - 1; });
        emit.range(base, h + 1, d - 1, [&](long long s) { return top + fh - 2 * s; });
        break;
      case CGRule::Case3:
        emit.range(base, 0, h, [&](long long i) { return top + fh - 2 * i; });
        emit.range(base, h + 1, f, [&](long long) { return top - 1; });
        emit.range(base, f + 1, fh + 1, [&](long long r) { return top + fh - 2 * r; });
        emit.range(base, fh + 2, d - 1, [&](long long) { return top - d - 1; });
        break;
      case CGRule::Case4:
        emit.range(base, 0, g, [&](long long) { return top + d - 1; });
        emit.range(base, g + 1, h, [&](long long j) { return top + fh - 2 * j; });
        emit.range(base, h + 1, f, [&](long long) { return top - 1; });
        emit.range(base, f + 1, d - 1, [&](long long s) { return top + fh - 2 * s; });
        break;
      case CGRule::Classical:
        break;
    }
  }

  const long long base = e * d;
  const long long top = (m - e) * d;
  switch (c.rule) {
    case CGRule::Case1:
      emit.range(base, 0, f, [&](long long i) { return top + fh - 2 * i; });
      break;
    case CGRule::Case2:
      emit.range(base, 0, g, [&](long long) { return top + d - 1; });
      emit.range(base, g + 1, f, [&](long long i) { return top + fh - 2 * i; });
      break;
    case CGRule::Case3:
      emit.range(base, 0, h, [&](long long i) { return top + fh - 2 * i; });
      emit.range(base, h + 1, f, [&](long long) { return top - 1; });
      break;
    case CGRule::Case4:
      emit.range(base, 0, g, [&](long long) { return top + d - 1; });
      emit.range(base, g + 1, h, [&](long long i) { return top + fh - 2 * i; });
      emit.range(base, h + 1, f, [&](long long) { return top - 1; });
      break;
    case CGRule::Classical:
      break;
  }
}

}  // namespace

Decomposition decompose_closed(const Indecomposable& a, const Indecomposable& b,
                               const QuiverContext& ctx) {
  if (a.length < 0 || b.length < 0) {
    throw std::invalid_argument("indecomposable length must be nonnegative");
  }
  const NormalizedPair pair = normalize_pair(a, b, ctx);
  Emitter emit(ctx, pair.shift);
  const CGCase c = classify(pair.left, pair.right, ctx);
  if (c.rule == CGRule::Classical) {
    classical(emit, pair.left, pair.right);
  } else {
    root_of_unity(emit, c);
  }
  return emit.take();
}

}  // namespace greenforge
