#include "greenforge/oracle.hpp"

namespace greenforge {

namespace {

std::vector<long long> ranks_from(const QuiverRep& rep, long long start, long long max_length) {
  std::vector<long long> ranks;
  const int d0 = rep.dim(start);
  ranks.push_back(d0);
  if (d0 == 0) return ranks;

  // Track the image of V_start along the path as an echelon basis.
  std::vector<Vector> image;
  for (int k = 0; k < d0; ++k) {
    Vector e(static_cast<std::size_t>(d0));
    e[static_cast<std::size_t>(k)] = Scalar(1);
    image.push_back(std::move(e));
  }
  for (long long l = 1; l <= max_length; ++l) {
    const Matrix* a = rep.arrow(start + l - 1);
    if (a == nullptr) {
      ranks.push_back(0);
      break;
    }
    EchelonBasis next(a->rows());
    for (const auto& v : image) next.insert(a->apply(v));
    ranks.push_back(static_cast<long long>(next.rank()));
    if (next.rank() == 0) break;
    image = next.rows();
  }
  return ranks;
}

}  // namespace

std::vector<long long> swept_vertices(const QuiverRep& rep) {
  std::vector<long long> out;
  if (rep.ctx.is_cyclic()) {
    for (long long v = 0; v < rep.ctx.cycle_order(); ++v) out.push_back(v);
    return out;
  }
  if (rep.vertex_dims.empty()) return out;
  const long long lo = rep.vertex_dims.begin()->first;
  const long long hi = rep.vertex_dims.rbegin()->first;
  for (long long v = lo - 1; v <= hi + 2; ++v) out.push_back(v);
  return out;
}

RankTable path_rank_table(const QuiverRep& rep) {
  RankTable table;
  const long long bound = rep.total_dim() + 2;
  for (long long v : swept_vertices(rep)) table.emplace(v, ranks_from(rep, v, bound));
  return table;
}

long long path_rank(const QuiverRep& rep, long long vertex, long long length) {
  if (length < 0) throw std::invalid_argument("path length must be nonnegative");
  auto ranks = ranks_from(rep, rep.ctx.vertex(vertex), length);
  return length < static_cast<long long>(ranks.size()) ? ranks[static_cast<std::size_t>(length)] : 0;
}

long long rank_at(const RankTable& table, long long vertex, long long length) {
  auto it = table.find(vertex);
  if (it == table.end()) return 0;
  const auto& row = it->second;
  return length < static_cast<long long>(row.size()) ? row[static_cast<std::size_t>(length)] : 0;
}

Decomposition decompose_rep(const QuiverRep& rep) {
  const RankTable ranks = path_rank_table(rep);
  const long long total = rep.total_dim();
  const QuiverContext& ctx = rep.ctx;

  Decomposition out;
  for (const auto& [i, row] : ranks) {
    const long long prev = ctx.vertex(i - 1);
    for (long long l = 0; l <= total; ++l) {
      const long long m = rank_at(ranks, i, l) - rank_at(ranks, i, l + 1) -
                          rank_at(ranks, prev, l + 1) + rank_at(ranks, prev, l + 2);
      if (m < 0) {
        throw OracleError(OracleError::Kind::NegativeMultiplicity,
                          "negative multiplicity " + std::to_string(m) + " for " +
                              to_string(Indecomposable{i, l}));
      }
      out.add({i, l}, m);
    }
  }
  if (out.total_dimension() != total) {
    throw OracleError(OracleError::Kind::DimensionMismatch,
                      "summands account for dimension " + std::to_string(out.total_dimension()) +
                          " of " + std::to_string(total));
  }
  return out;
}

QuiverRep realize(const Decomposition& d, const QuiverContext& ctx) {
  QuiverRep out(ctx);
  for (const auto& [v, m] : d.summands()) {
    for (long long k = 0; k < m; ++k) out = direct_sum(out, indecomposable_rep(v, ctx));
  }
  return out;
}

}  // namespace greenforge
