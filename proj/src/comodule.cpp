#include "greenforge/comodule.hpp"

#include <functional>
#include <stdexcept>

namespace greenforge {

std::string to_string(const Indecomposable& v) {
  return "V(" + std::to_string(v.vertex) + "," + std::to_string(v.length) + ")";
}

int QuiverRep::dim(long long v) const {
  auto it = vertex_dims.find(ctx.vertex(v));
  return it == vertex_dims.end() ? 0 : it->second;
}

int QuiverRep::total_dim() const {
  int total = 0;
  for (const auto& [v, d] : vertex_dims) total += d;
  return total;
}

const Matrix* QuiverRep::arrow(long long source) const {
  auto it = arrows.find(ctx.vertex(source));
  return it == arrows.end() ? nullptr : &it->second;
}

nlohmann::json scalar_to_json(const Scalar& s) {
  auto rational = [](const Rational& r) -> nlohmann::json {
    if (auto small = r.small(); small && small->second == 1) return small->first;
    return r.str();
  };
  if (s.is_rational()) return rational(s.coeffs()[0]);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(rational(c));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json QuiverRep::to_json() const {
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [v, d] : vertex_dims) dims[std::to_string(v)] = d;
  nlohmann::json arr = nlohmann::json::object();
  for (const auto& [v, m] : arrows) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
      rows.push_back(std::move(row));
    }
    arr[std::to_string(v)] = std::move(rows);
  }
  return {{"vertex_dims", dims}, {"arrows", arr}};
}

namespace {

struct ArrowTerm {
  std::size_t target;
  Scalar coefficient;
};

// Builds a representation from a global basis: the vertex of each basis vector
// and the image of each basis vector under the arrow leaving its vertex.
QuiverRep assemble(const QuiverContext& ctx, const std::vector<long long>& vertices,
                   const std::vector<std::string>& labels,
                   const std::function<std::vector<ArrowTerm>(std::size_t)>& image) {
  QuiverRep rep(ctx);
  std::vector<std::size_t> local(vertices.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    local[k] = static_cast<std::size_t>(rep.vertex_dims[vertices[k]]++);
    rep.basis_labels[vertices[k]].push_back(labels[k]);
  }
  for (const auto& [v, d] : rep.vertex_dims) {
    int target = rep.dim(v + 1);
    if (target > 0) {
      rep.arrows.emplace(v, Matrix(static_cast<std::size_t>(target), static_cast<std::size_t>(d)));
    }
  }
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (auto& term : image(k)) {
      if (term.coefficient.is_zero()) continue;
      if (!ctx.same_vertex(vertices[term.target], vertices[k] + 1)) {
        throw std::logic_error("arrow image lands on the wrong vertex");
      }
      Matrix& m = rep.arrows.at(vertices[k]);
      m(local[term.target], local[k]) += term.coefficient;
    }
  }
  return rep;
}

}  // namespace

QuiverRep indecomposable_rep(const Indecomposable& v, const QuiverContext& ctx) {
  if (v.length < 0) throw std::invalid_argument("indecomposable length must be nonnegative");
  const auto size = static_cast<std::size_t>(v.length + 1);
  std::vector<long long> vertices(size);
  std::vector<std::string> labels(size);
  for (std::size_t m = 0; m < size; ++m) {
    vertices[m] = ctx.vertex(v.vertex + static_cast<long long>(m));
    labels[m] = "v_" + std::to_string(m);
  }
  const Scalar one = ctx.q().unit();
  return assemble(ctx, vertices, labels, [&](std::size_t m) {
    std::vector<ArrowTerm> out;
    if (m + 1 < size) out.push_back({m + 1, one});
    return out;
  });
}

QuiverRep tensor_rep(const Indecomposable& a, const Indecomposable& b, const QuiverContext& ctx) {
  if (a.length < 0 || b.length < 0) {
    throw std::invalid_argument("indecomposable length must be nonnegative");
  }
  const auto rows = static_cast<std::size_t>(a.length + 1);
  const auto cols = static_cast<std::size_t>(b.length + 1);
  std::vector<long long> vertices(rows * cols);
  std::vector<std::string> labels(rows * cols);
  for (std::size_t s = 0; s < rows; ++s) {
    for (std::size_t t = 0; t < cols; ++t) {
      vertices[s * cols + t] = tensor_vertex(a, b, static_cast<long long>(s),
                                             static_cast<long long>(t), ctx);
      labels[s * cols + t] = "v_" + std::to_string(s) + "⊗v_" + std::to_string(t);
    }
  }
  const QSpec& q = ctx.q();
  const Scalar one = q.unit();
  return assemble(ctx, vertices, labels, [&](std::size_t k) {
    const std::size_t s = k / cols;
    const std::size_t t = k % cols;
    std::vector<ArrowTerm> out;
    if (s + 1 < rows) out.push_back({(s + 1) * cols + t, one});
    if (t + 1 < cols) out.push_back({s * cols + t + 1, q.power(a.vertex + static_cast<long long>(s))});
    return out;
  });
}

QuiverRep direct_sum(const QuiverRep& x, const QuiverRep& y) {
  if (x.ctx.cycle_order() != y.ctx.cycle_order() || !(x.ctx.q() == y.ctx.q())) {
    throw std::invalid_argument("direct sum of representations over different quivers");
  }
  QuiverRep out(x.ctx);
  out.vertex_dims = x.vertex_dims;
  for (const auto& [v, d] : y.vertex_dims) out.vertex_dims[v] += d;
  for (const auto& [v, d] : out.vertex_dims) {
    const int target = out.dim(v + 1);
    if (target == 0) continue;
    Matrix m(static_cast<std::size_t>(target), static_cast<std::size_t>(d));
    // Block-diagonal: x's basis first, then y's, at both endpoints.
    auto place = [&](const QuiverRep& part, std::size_t row0, std::size_t col0) {
      if (const Matrix* a = part.arrow(v)) {
        for (std::size_t r = 0; r < a->rows(); ++r) {
          for (std::size_t c = 0; c < a->cols(); ++c) m(row0 + r, col0 + c) = (*a)(r, c);
        }
      }
    };
    place(x, 0, 0);
    place(y, static_cast<std::size_t>(x.dim(v + 1)), static_cast<std::size_t>(x.dim(v)));
    out.arrows.emplace(v, std::move(m));
  }
  for (const auto* part : {&x, &y}) {
    for (const auto& [v, labels] : part->basis_labels) {
      auto& dst = out.basis_labels[v];
      dst.insert(dst.end(), labels.begin(), labels.end());
    }
  }
  return out;
}

Matrix dual_path_action(const Indecomposable& a, const Indecomposable& b, const PathIndex& p,
                        const QuiverContext& ctx) {
  const auto rows = a.length + 1;
  const auto cols = b.length + 1;
  const auto n = static_cast<std::size_t>(rows * cols);
  const QSpec& q = ctx.q();
  GaussianBinomials binom(q.value());
  Matrix out(n, n);
  for (long long s = 0; s < rows; ++s) {
    for (long long t = 0; t < cols; ++t) {
      if (!ctx.same_vertex(tensor_vertex(a, b, s, t, ctx), p.source)) continue;
      const auto col = static_cast<std::size_t>(s * cols + t);
      for (long long x = 0; x <= p.length; ++x) {
        const long long y = p.length - x;
        if (s + x > a.length || t + y > b.length) continue;
        Scalar c = q.power((a.vertex + s) * y) * binom(p.length, x);
        if (c.is_zero()) continue;
        out(static_cast<std::size_t>((s + x) * cols + t + y), col) += c;
      }
    }
  }
  return out;
}

std::vector<std::pair<long long, PathIndex>> comodule_delta(const Indecomposable& v, long long m,
                                                            const QuiverContext& ctx) {
  if (m < 0 || m > v.length) throw std::out_of_range("basis index outside V(i,l)");
  std::vector<std::pair<long long, PathIndex>> out;
  for (long long j = m; j <= v.length; ++j) {
    out.emplace_back(j, PathIndex{ctx.vertex(v.vertex + m), j - m});
  }
  return out;
}

std::vector<TensorCoactionTerm> tensor_delta(const Indecomposable& a, const Indecomposable& b,
                                             long long s, long long t, const QuiverContext& ctx) {
  if (s < 0 || s > a.length || t < 0 || t > b.length) {
    throw std::out_of_range("basis index outside the tensor product");
  }
  const QSpec& q = ctx.q();
  GaussianBinomials binom(q.value());
  std::vector<TensorCoactionTerm> out;
  const long long source = ctx.vertex(a.vertex + b.vertex + s + t);
  for (long long x = s; x <= a.length; ++x) {
    for (long long y = t; y <= b.length; ++y) {
      Scalar c = q.power((a.vertex + s) * (y - t)) * binom(x + y - s - t, x - s);
      if (c.is_zero()) continue;
      out.push_back({std::move(c), x, y, PathIndex{source, x + y - s - t}});
    }
  }
  return out;
}

}  // namespace greenforge
