#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greenforge/clebsch_gordan.hpp"
#include "greenforge/green_ring.hpp"
#include "greenforge/oracle.hpp"
#include "greenforge/sweep.hpp"

namespace py = pybind11;
using namespace greenforge;

namespace {

using Label = std::pair<long long, long long>;
using Multiset = std::map<Label, long long>;

Multiset to_py(const Decomposition& d) {
  Multiset out;
  for (const auto& [v, m] : d.summands()) out[{v.vertex, v.length}] = m;
  return out;
}

Multiset to_py(const GreenElement& g) {
  Multiset out;
  for (const auto& [v, c] : g.terms()) out[{v.vertex, v.length}] = c;
  return out;
}

GreenElement from_py(const Multiset& m) {
  GreenElement g;
  for (const auto& [label, c] : m) g.add({label.first, label.second}, c);
  return g;
}

Indecomposable ind(const Label& l) { return {l.first, l.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Clebsch-Gordan decompositions and Green rings of minimal Hopf quivers";

  py::class_<QuiverContext>(m, "QuiverContext")
      .def_static(
          "cyclic", [](int n, const std::string& q) { return QuiverContext::cyclic(n, QSpec::parse(q)); },
          py::arg("n"), py::arg("q") = "1")
      .def_static(
          "infinite", [](const std::string& q) { return QuiverContext::infinite(QSpec::parse(q)); },
          py::arg("q") = "1")
      .def_property_readonly("is_cyclic", &QuiverContext::is_cyclic)
      .def_property_readonly("cycle_order", &QuiverContext::cycle_order)
      .def_property_readonly("q", [](const QuiverContext& c) { return c.q().str(); })
      .def("__repr__", &QuiverContext::str);

  m.def(
      "decompose", [](const Label& a, const Label& b, const QuiverContext& ctx) {
        return to_py(decompose_closed(ind(a), ind(b), ctx));
      },
      py::arg("a"), py::arg("b"), py::arg("ctx"), "Closed-form decomposition as {(vertex, length): multiplicity}.");
  m.def(
      "decompose_oracle", [](const Label& a, const Label& b, const QuiverContext& ctx) {
        return to_py(decompose_rep(tensor_rep(ind(a), ind(b), ctx)));
      },
      py::arg("a"), py::arg("b"), py::arg("ctx"), "Rank-oracle decomposition of the tensor representation.");
  m.def(
      "tensor_dims", [](const Label& a, const Label& b, const QuiverContext& ctx) {
        const QuiverRep rep = tensor_rep(ind(a), ind(b), ctx);
        return std::map<long long, long long>(rep.vertex_dims.begin(), rep.vertex_dims.end());
      },
      py::arg("a"), py::arg("b"), py::arg("ctx"));
  m.def(
      "verify_sweep",
      [](const QuiverContext& ctx, long long max_length, long long window) {
        const SweepReport r = verify_sweep(ctx, sweep_pairs(ctx, max_length, window), thread_hint());
        return py::make_tuple(r.pairs, r.mismatches);
      },
      py::arg("ctx"), py::arg("max_length"), py::arg("window") = 3, "Returns (pairs, mismatches).");

  m.def(
      "gr_mul", [](const Multiset& a, const Multiset& b, const QuiverContext& ctx) {
        return to_py(gr_mul(from_py(a), from_py(b), ctx));
      },
      py::arg("a"), py::arg("b"), py::arg("ctx"), "Green ring product of {(vertex, length): coefficient} maps.");
  m.def(
      "to_poly", [](const Multiset& a, const QuiverContext& ctx) { return to_poly(from_py(a), ctx).str(); },
      py::arg("a"), py::arg("ctx"));
  m.def(
      "from_poly",
      [](const std::string& p, const QuiverContext& ctx) {
        return to_py(from_poly(PresentedPoly::parse(p, ring_tag_for(ctx), x_modulus_for(ctx)), ctx));
      },
      py::arg("poly"), py::arg("ctx"));
  m.def(
      "verify_presentation",
      [](const QuiverContext& ctx, int battery) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& c : verify_presentation(ctx, battery).checks) out.emplace_back(c.name, c.holds);
        return out;
      },
      py::arg("ctx"), py::arg("battery") = 200);
  m.def("fib2", [](long long k) { return fib2(k).str(); }, py::arg("k"));
  m.def("fib3", [](long long k, int d) { return fib3(k, d).str(); }, py::arg("k"), py::arg("d"));

  py::register_exception<RingTagMismatch>(m, "RingTagMismatch", PyExc_ValueError);
}
