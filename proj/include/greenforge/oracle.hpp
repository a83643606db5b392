#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "greenforge/comodule.hpp"
#include "greenforge/decomposition.hpp"

namespace greenforge {

/// Raised when the rank data cannot come from a locally nilpotent
/// finite-dimensional representation (or the rank inversion is wrong).
class OracleError : public std::runtime_error {
 public:
  enum class Kind { NegativeMultiplicity, DimensionMismatch };
  OracleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Ranks r_i(l) of the path maps out of every swept vertex i. Each row runs
/// from l = 0 until the first zero rank (all later ranks vanish too).
using RankTable = std::map<long long, std::vector<long long>>;

/// Vertices whose ranks determine the decomposition: all of Z_n for cyclic
/// quivers, the support padded by one below and two above otherwise.
std::vector<long long> swept_vertices(const QuiverRep& rep);

RankTable path_rank_table(const QuiverRep& rep);

/// Rank of V_(p_i^l) = V_(a_(i+l-1)) ... V_(a_i); rank at l = 0 is dim V_i.
long long path_rank(const QuiverRep& rep, long long vertex, long long length);

/// Looks up r_i(l), treating missing entries as zero.
long long rank_at(const RankTable& table, long long vertex, long long length);

/// m(i,l) = r_i(l) - r_i(l+1) - r_(i-1)(l+1) + r_(i-1)(l+2).
Decomposition decompose_rep(const QuiverRep& rep);

/// The direct sum of indecomposable representations described by d.
QuiverRep realize(const Decomposition& d, const QuiverContext& ctx);

}  // namespace greenforge
