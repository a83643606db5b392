#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "greenforge/qcombinatorics.hpp"
#include "greenforge/scalar.hpp"

namespace greenforge {

/// A minimal Hopf quiver (the cyclic quiver on Z_n, or the infinite linear
/// quiver on Z) together with its Hopf parameter q.
class QuiverContext {
 public:
  /// Requires q^n = 1; throws std::invalid_argument otherwise.
  static QuiverContext cyclic(int n, QSpec q);
  static QuiverContext infinite(QSpec q);

  bool is_cyclic() const { return n_ > 0; }
  /// n for the cyclic quiver, 0 for the infinite linear quiver.
  int cycle_order() const { return n_; }
  const QSpec& q() const { return q_; }

  /// Canonical vertex label: reduced into [0, n) when cyclic.
  long long vertex(long long v) const;
  bool same_vertex(long long a, long long b) const { return vertex(a) == vertex(b); }

  std::string str() const;

 private:
  QuiverContext(int n, QSpec q) : n_(n), q_(std::move(q)) {}

  int n_ = 0;
  QSpec q_;
};

/// The path p_source^length: `length` consecutive arrows starting at `source`.
/// Length 0 is the trivial path (group-like g^source).
struct PathIndex {
  long long source = 0;
  long long length = 0;

  friend auto operator<=>(const PathIndex&, const PathIndex&) = default;
};

std::string to_string(const PathIndex& p);

struct ScaledPath {
  Scalar coefficient;
  PathIndex path;
};

/// p_i^l * p_j^m = q^(i m) C(l+m, l)_q p_(i+j)^(l+m). The coefficient may be zero.
ScaledPath path_mul(const PathIndex& p, const PathIndex& r, const QuiverContext& ctx);

/// Delta(p_i^l) = sum_k p_(i+k)^(l-k) (x) p_i^k, for k = 0..l.
std::vector<std::pair<PathIndex, PathIndex>> coproduct(const PathIndex& p,
                                                       const QuiverContext& ctx);

/// Counit: 1 on trivial paths, 0 otherwise.
inline int counit(const PathIndex& p) { return p.length == 0 ? 1 : 0; }

/// Finite linear combination of paths with vertices in canonical form and no
/// zero coefficients.
using PathCombination = std::map<PathIndex, Scalar>;

PathCombination single_path(const PathIndex& p, const QuiverContext& ctx,
                            const Scalar& coefficient);
PathCombination multiply(const PathCombination& a, const PathCombination& b,
                         const QuiverContext& ctx);
PathCombination scale(const PathCombination& a, const Scalar& c);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

/// Evaluates the generators-and-relations presentation of the path Hopf
/// algebra for this context, each relation checked exactly in the path basis.
std::vector<RelationCheck> check_presentation(const QuiverContext& ctx);

}  // namespace greenforge
