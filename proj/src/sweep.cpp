#include "greenforge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "greenforge/clebsch_gordan.hpp"
#include "greenforge/oracle.hpp"

namespace greenforge {

std::vector<OperandPair> sweep_pairs(const QuiverContext& ctx, long long max_length,
                                     long long window) {
  std::vector<long long> vertices;
  if (ctx.is_cyclic()) {
    for (long long v = 0; v < ctx.cycle_order(); ++v) vertices.push_back(v);
  } else {
    for (long long v = -window; v <= window; ++v) vertices.push_back(v);
  }
  std::vector<OperandPair> out;
  for (long long l = 0; l <= max_length; ++l) {
    for (long long m = 0; m <= max_length; ++m) {
      for (long long i : vertices) {
        for (long long j : vertices) out.push_back({{i, l}, {j, m}});
      }
    }
  }
  return out;
}

PairComparison compare_pair(const Indecomposable& a, const Indecomposable& b,
                            const QuiverContext& ctx) {
  PairComparison out{{a, b}, {}, {}, {}};
  try {
    out.closed = decompose_closed(a, b, ctx);
    out.oracle = decompose_rep(tensor_rep(a, b, ctx));
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::string SweepReport::summary() const {
  return std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches";
}

SweepReport verify_sweep(const QuiverContext& ctx, const std::vector<OperandPair>& pairs,
                         unsigned threads) {
  std::vector<char> ok(pairs.size(), 1);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    ok[k] = compare_pair(pairs[k].first, pairs[k].second, ctx).matches() ? 1 : 0;
  });
  SweepReport report;
  report.pairs = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (ok[k]) continue;
    if (report.mismatches++ == 0) {
      report.first_mismatch = compare_pair(pairs[k].first, pairs[k].second, ctx);
    }
  }
  return report;
}

unsigned thread_hint() {
  const char* env = std::getenv("GREENFORGE_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<unsigned>(std::min<long>(v, 256));
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& task) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) {
        try {
          task(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace greenforge
