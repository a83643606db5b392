#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "greenforge/linalg.hpp"
#include "greenforge/quiver.hpp"

namespace greenforge {

/// The string comodule V(vertex, length): basis v_0..v_length, with v_m at
/// vertex + m.
struct Indecomposable {
  long long vertex = 0;
  long long length = 0;

  long long dimension() const { return length + 1; }
  friend auto operator<=>(const Indecomposable&, const Indecomposable&) = default;
};

std::string to_string(const Indecomposable& v);

/// A finite-dimensional representation of the quiver: a vector space per
/// vertex and a matrix per arrow a_j : V_j -> V_(j+1).
struct QuiverRep {
  explicit QuiverRep(QuiverContext context) : ctx(std::move(context)) {}

  QuiverContext ctx;
  /// Only vertices with nonzero dimension are stored.
  std::map<long long, int> vertex_dims;
  /// Keyed by source vertex; present only when both endpoints are nonzero.
  std::map<long long, Matrix> arrows;
  std::map<long long, std::vector<std::string>> basis_labels;

  int dim(long long v) const;
  int total_dim() const;
  const Matrix* arrow(long long source) const;

  /// {"vertex_dims": {...}, "arrows": {...}}.
  nlohmann::json to_json() const;
};

nlohmann::json scalar_to_json(const Scalar& s);

QuiverRep indecomposable_rep(const Indecomposable& v, const QuiverContext& ctx);

/// V(i,l) (x) V(j,m) on the basis v_s (x) v_t (row-major in (s, t)), with arrows
/// acting by v_s (x) v_t -> v_(s+1) (x) v_t + q^(i+s) v_s (x) v_(t+1).
QuiverRep tensor_rep(const Indecomposable& a, const Indecomposable& b, const QuiverContext& ctx);

QuiverRep direct_sum(const QuiverRep& x, const QuiverRep& y);

/// Vertex of v_s (x) v_t in V(i,l) (x) V(j,m).
inline long long tensor_vertex(const Indecomposable& a, const Indecomposable& b, long long s,
                               long long t, const QuiverContext& ctx) {
  return ctx.vertex(a.vertex + b.vertex + s + t);
}

/// Matrix of the dual path action (p_e^f)^* on the full tensor basis.
Matrix dual_path_action(const Indecomposable& a, const Indecomposable& b, const PathIndex& p,
                        const QuiverContext& ctx);

/// The coaction delta(v_m) = sum_{j=m}^{l} v_j (x) p_(i+m)^(j-m) of V(i,l).
std::vector<std::pair<long long, PathIndex>> comodule_delta(const Indecomposable& v, long long m,
                                                            const QuiverContext& ctx);

struct TensorCoactionTerm {
  Scalar coefficient;
  long long x = 0;
  long long y = 0;
  PathIndex path;
};

/// The coaction on v_s (x) v_t of V(i,l) (x) V(j,m), term by term.
std::vector<TensorCoactionTerm> tensor_delta(const Indecomposable& a, const Indecomposable& b,
                                             long long s, long long t, const QuiverContext& ctx);

}  // namespace greenforge
