#include "greenforge/decomposition.hpp"

#include <stdexcept>

namespace greenforge {

void Decomposition::add(const Indecomposable& v, long long mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity for " + to_string(v));
  if (v.length < 0) throw std::invalid_argument("negative length in " + to_string(v));
  if (mult == 0) return;
  summands_[v] += mult;
}

long long Decomposition::multiplicity(const Indecomposable& v) const {
  auto it = summands_.find(v);
  return it == summands_.end() ? 0 : it->second;
}

long long Decomposition::total_dimension() const {
  long long total = 0;
  for (const auto& [v, m] : summands_) total += m * v.dimension();
  return total;
}

std::map<long long, long long> Decomposition::graded_dims(const QuiverContext& ctx) const {
  std::map<long long, long long> dims;
  for (const auto& [v, m] : summands_) {
    for (long long k = 0; k <= v.length; ++k) dims[ctx.vertex(v.vertex + k)] += m;
  }
  return dims;
}

Decomposition& Decomposition::operator+=(const Decomposition& other) {
  for (const auto& [v, m] : other.summands_) summands_[v] += m;
  return *this;
}

nlohmann::json Decomposition::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [v, m] : summands_) {
    list.push_back({{"vertex", v.vertex}, {"length", v.length}, {"multiplicity", m}});
  }
  return {{"summands", list}};
}

Decomposition Decomposition::from_json(const nlohmann::json& j) {
  Decomposition out;
  for (const auto& s : j.at("summands")) {
    out.add({s.at("vertex").get<long long>(), s.at("length").get<long long>()},
            s.at("multiplicity").get<long long>());
  }
  return out;
}

std::string Decomposition::str() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (const auto& [v, m] : summands_) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += to_string(v);
  }
  return out;
}

}  // namespace greenforge
