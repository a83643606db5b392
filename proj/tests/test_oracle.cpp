#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "greenforge/oracle.hpp"

using namespace greenforge;

namespace {

std::vector<QuiverContext> contexts() {
  std::vector<QuiverContext> out;
  for (int n : {1, 2, 3, 4, 6}) {
    out.push_back(QuiverContext::cyclic(n, QSpec::one()));
    for (int d = 2; d <= n; ++d) {
      if (n % d == 0) out.push_back(QuiverContext::cyclic(n, QSpec::root_of_unity(d, 1)));
    }
  }
  return out;
}

Decomposition single(const Indecomposable& v, long long m = 1) {
  Decomposition d;
  d.add(v, m);
  return d;
}

}  // namespace

TEST_CASE("path ranks") {
  const auto c2 = QuiverContext::cyclic(2, QSpec::one());
  const QuiverRep v03 = indecomposable_rep({0, 3}, c2);
  CHECK(path_rank(v03, 0, 1) == 2);
  CHECK(path_rank(v03, 0, 0) == 2);
  CHECK(path_rank(v03, 1, 2) == 1);
  CHECK(path_rank(v03, 0, 3) == 1);
  for (long long l = 5; l <= 8; ++l) CHECK(path_rank(v03, 0, l) == 0);

  const auto c4 = QuiverContext::cyclic(4, QSpec::one());
  const QuiverRep v11 = indecomposable_rep({1, 1}, c4);
  CHECK(path_rank(v11, 1, 1) == 1);
  CHECK(path_rank(v11, 0, 1) == 0);
  CHECK(path_rank(v11, 5, 1) == 1);
  CHECK_THROWS(path_rank(v11, 1, -1));
}

TEST_CASE("decomposition examples") {
  const auto c3 = QuiverContext::cyclic(3, QSpec::one());
  Decomposition expected;
  expected.add({0, 2});
  expected.add({1, 0});
  CHECK(decompose_rep(tensor_rep({0, 1}, {0, 1}, c3)) == expected);

  const auto z3 = QuiverContext::cyclic(3, QSpec::parse("zeta:3:1"));
  Decomposition two_summands;
  two_summands.add({0, 2});
  two_summands.add({1, 2});
  CHECK(decompose_rep(tensor_rep({0, 1}, {0, 2}, z3)) == two_summands);
  CHECK(decompose_rep(tensor_rep({0, 1}, {0, 2}, QuiverContext::infinite(QSpec::parse("zeta:3:2")))) ==
        two_summands);
}

TEST_CASE("indecomposables decompose to themselves") {
  for (const auto& ctx : contexts()) {
    for (long long i = 0; i < ctx.cycle_order(); ++i) {
      for (long long l = 0; l <= 9; ++l) {
        CHECK(decompose_rep(indecomposable_rep({i, l}, ctx)) == single({i, l}));
      }
    }
  }
  const auto inf = QuiverContext::infinite(QSpec::parse("2"));
  for (long long i = -3; i <= 3; ++i) {
    for (long long l = 0; l <= 6; ++l) CHECK(decompose_rep(indecomposable_rep({i, l}, inf)) == single({i, l}));
  }
}

TEST_CASE("rank round trip") {
  for (const auto& ctx : contexts()) {
    const long long n = ctx.cycle_order();
    for (long long l = 0; l <= 8; ++l) {
      for (long long m = 0; m <= 8; ++m) {
        const QuiverRep rep = tensor_rep({0, l}, {n > 1 ? 1 : 0, m}, ctx);
        const Decomposition d = decompose_rep(rep);
        CHECK(path_rank_table(realize(d, ctx)) == path_rank_table(rep));
        CHECK(d.graded_dims(ctx) == std::map<long long, long long>(rep.vertex_dims.begin(), rep.vertex_dims.end()));
      }
    }
  }
}

TEST_CASE("additivity over direct sums") {
  std::mt19937_64 rng(17);
  for (const auto& ctx : contexts()) {
    std::uniform_int_distribution<long long> vertex(0, ctx.cycle_order() - 1), length(0, 5);
    for (int trial = 0; trial < 10; ++trial) {
      const QuiverRep x = tensor_rep({vertex(rng), length(rng)}, {vertex(rng), length(rng)}, ctx);
      const QuiverRep y = indecomposable_rep({vertex(rng), length(rng)}, ctx);
      Decomposition expected = decompose_rep(x);
      expected += decompose_rep(y);
      CHECK(decompose_rep(direct_sum(x, y)) == expected);
    }
  }
}

TEST_CASE("telescoping indicator") {
  // In V(j,m) alone, r_i(l) - r_i(l+1) is 1 exactly when l <= m and i - j = m - l.
  const auto ctx = QuiverContext::infinite(QSpec::one());
  for (long long j = -2; j <= 2; ++j) {
    for (long long m = 0; m <= 5; ++m) {
      const QuiverRep rep = indecomposable_rep({j, m}, ctx);
      const RankTable table = path_rank_table(rep);
      for (long long i = j - 3; i <= j + m + 3; ++i) {
        for (long long l = 0; l <= m + 2; ++l) {
          const long long diff = rank_at(table, i, l) - rank_at(table, i, l + 1);
          const bool expected = l <= m && i >= j && i - j == m - l;
          CHECK(diff == (expected ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("swept vertices") {
  const auto inf = QuiverContext::infinite(QSpec::one());
  CHECK(swept_vertices(indecomposable_rep({2, 1}, inf)) == std::vector<long long>{1, 2, 3, 4, 5});
  CHECK(swept_vertices(indecomposable_rep({0, 0}, QuiverContext::cyclic(3, QSpec::one()))) ==
        std::vector<long long>{0, 1, 2});
}

TEST_CASE("decomposition JSON") {
  Decomposition d;
  d.add({2, 1}, 2);
  d.add({0, 5});
  const auto j = d.to_json();
  CHECK(j.dump() ==
        R"({"summands":[{"length":5,"multiplicity":1,"vertex":0},{"length":1,"multiplicity":2,"vertex":2}]})");
  CHECK(Decomposition::from_json(j) == d);
  CHECK(d.str() == "V(0,5) + 2*V(2,1)");
  CHECK(d.total_dimension() == 10);
  CHECK_THROWS(d.add({0, 0}, -1));
}
