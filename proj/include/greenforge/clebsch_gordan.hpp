#pragma once

#include <stdexcept>
#include <string>

#include "greenforge/comodule.hpp"
#include "greenforge/decomposition.hpp"
#include "greenforge/quiver.hpp"

namespace greenforge {

/// Raised when a closed-form rule would emit a summand of negative length.
class FormulaError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// V(i,l) (x) V(j,m) = V(i+j,0) (x) V(0,left) (x) V(0,right) with left <= right.
struct NormalizedPair {
  long long shift = 0;
  long long left = 0;
  long long right = 0;
};

NormalizedPair normalize_pair(const Indecomposable& a, const Indecomposable& b,
                              const QuiverContext& ctx);

/// Which closed-form rule applies to V(0,left) (x) V(0,right).
///
/// `Classical` is the q = 1 / non-root-of-unity rule. The four root-of-unity
/// rules are selected on the d-adic digits left = e d + f, right = m d + h:
///
///   Case1: f <= h, f + h <  d - 1      Case2: f <= h, f + h >= d - 1
///   Case3: f >  h, f + h <  d - 1      Case4: f >  h, f + h >= d - 1
///
/// The boundary f + h = d - 1 belongs to Case2/Case4 with gamma = 0.
enum class CGRule { Classical, Case1, Case2, Case3, Case4 };

struct CGCase {
  CGRule rule = CGRule::Classical;
  long long d = 1;
  long long e = 0;
  long long f = 0;
  long long m = 0;
  long long h = 0;
  long long gamma = 0;  // f + h - d + 1
};

CGCase classify(long long left, long long right, const QuiverContext& ctx);
std::string to_string(CGRule rule);

/// Closed-form decomposition of V(i,l) (x) V(j,m), in canonical order.
Decomposition decompose_closed(const Indecomposable& a, const Indecomposable& b,
                               const QuiverContext& ctx);

}  // namespace greenforge
