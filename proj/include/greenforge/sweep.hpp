#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenforge/comodule.hpp"
#include "greenforge/decomposition.hpp"
#include "greenforge/quiver.hpp"

namespace greenforge {

using OperandPair = std::pair<Indecomposable, Indecomposable>;

/// All pairs (V(i,l), V(j,m)) with l, m <= max_length, sorted by (l, m, i, j).
/// Vertices run over Z_n for a cyclic quiver and [-window, window] otherwise.
std::vector<OperandPair> sweep_pairs(const QuiverContext& ctx, long long max_length,
                                     long long window = 3);

/// Closed form against the rank oracle for one pair.
struct PairComparison {
  OperandPair operands;
  Decomposition closed;
  Decomposition oracle;
  std::string error;  // set when either side threw
  bool matches() const { return error.empty() && closed == oracle; }
};

PairComparison compare_pair(const Indecomposable& a, const Indecomposable& b,
                            const QuiverContext& ctx);

struct SweepReport {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::optional<PairComparison> first_mismatch;
  bool ok() const { return mismatches == 0; }
  /// "N pairs, M mismatches"
  std::string summary() const;
};

SweepReport verify_sweep(const QuiverContext& ctx, const std::vector<OperandPair>& pairs,
                         unsigned threads = 1);

/// Worker count from GREENFORGE_THREADS (default 1).
unsigned thread_hint();

/// Runs task(k) for k in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

}  // namespace greenforge
