#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "greenforge/comodule.hpp"
#include "greenforge/quiver.hpp"

namespace greenforge {

/// Multiplicities of indecomposable summands, V(i,l) -> m >= 1. Vertices are
/// stored in canonical form for the quiver that produced them.
class Decomposition {
 public:
  using Map = std::map<Indecomposable, long long>;

  Decomposition() = default;

  /// Adds mult copies of v (mult may be zero; negative throws).
  void add(const Indecomposable& v, long long mult = 1);

  const Map& summands() const { return summands_; }
  long long multiplicity(const Indecomposable& v) const;
  long long total_dimension() const;
  bool empty() const { return summands_.empty(); }

  /// Dimension of each vertex space of the direct sum.
  std::map<long long, long long> graded_dims(const QuiverContext& ctx) const;

  Decomposition& operator+=(const Decomposition& other);
  friend bool operator==(const Decomposition&, const Decomposition&) = default;

  /// {"summands": [{"vertex": i, "length": l, "multiplicity": m}, ...]}
  nlohmann::json to_json() const;
  static Decomposition from_json(const nlohmann::json& j);
  /// "V(0,5) + V(1,3) + 2*V(2,1)"
  std::string str() const;

 private:
  Map summands_;
};

}  // namespace greenforge
