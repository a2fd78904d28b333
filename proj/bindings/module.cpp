// Python bindings for the core operations. Rational scalars cross the
// boundary as strings to stay exact; structured results use plain dicts.
#include "ddq/cohomology.hpp"
#include "ddq/freeproduct.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ddq;

namespace {

SemiSimpleAlgebra make_algebra(const std::vector<int>& dims) {
    return SemiSimpleAlgebra(dims);
}

Arrow make_arrow(int tail, int head, int primary, int secondary) {
    return Arrow{head - 1, tail - 1, primary, secondary}; // 1-based interface
}

py::dict arrow_dict(const Arrow& a) {
    py::dict d;
    d["tail"] = a.tail + 1;
    d["head"] = a.head + 1;
    d["primary"] = a.primary;
    d["secondary"] = a.secondary;
    return d;
}

py::list quiver_arrows(const std::vector<int>& dims) {
    py::list out;
    for (const Arrow& a : build_quiver(SemiSimpleAlgebra(dims)).arrows)
        out.append(arrow_dict(a));
    return out;
}

py::list graded_terms(const GradedElement& g) {
    py::list out;
    for (const auto& [n, c] : g.terms()) {
        py::list word;
        for (const Arrow& a : n.word) word.append(arrow_dict(a));
        py::dict term;
        term["coeff"] = c.to_string();
        term["word"] = word;
        if (n.degree() == 0) term["vertex"] = n.vertex + 1;
        out.append(term);
    }
    return out;
}

DoubleTensor tensor_from_pairs(const SemiSimpleAlgebra& S, const std::string& coeffs) {
    return pairwise_tensor(S, parse_coefficients(coeffs));
}

} // namespace

PYBIND11_MODULE(_ddq, m) {
    m.doc() = "exact computations with double derivation quivers";

    py::class_<SemiSimpleAlgebra>(m, "Algebra")
        .def(py::init(&make_algebra), py::arg("dims"))
        .def_readonly("dims", &SemiSimpleAlgebra::dims)
        .def("dim", &SemiSimpleAlgebra::dim);

    m.def("quiver_arrows", &quiver_arrows, py::arg("dims"),
          "arrows of the double derivation quiver, 1-based vertices");
    m.def("derivation_dimension",
          [](const std::vector<int>& dims) {
              return quiver_dimension_formula(SemiSimpleAlgebra(dims));
          },
          py::arg("dims"));

    m.def("necklace_bracket",
          [](const std::vector<int>& dims,
             const std::vector<std::array<int, 4>>& a,
             const std::vector<std::array<int, 4>>& b) {
              SemiSimpleAlgebra S(dims);
              auto to_word = [](const std::vector<std::array<int, 4>>& v) {
                  std::vector<Arrow> w;
                  for (const auto& t : v) w.push_back(make_arrow(t[0], t[1], t[2], t[3]));
                  return w;
              };
              GradedElement ga, gb;
              ga.add_word(to_word(a), Poly(1));
              gb.add_word(to_word(b), Poly(1));
              return graded_terms(necklace_bracket(S, ga, gb));
          },
          py::arg("dims"), py::arg("a"), py::arg("b"),
          "bracket of two cyclic words given as (tail, head, primary, secondary)");

    m.def("check_tensor",
          [](const std::vector<int>& dims, const std::string& coeffs) {
              SemiSimpleAlgebra S(dims);
              const CheckResult r = check_tensor(S, tensor_from_pairs(S, coeffs));
              py::dict out;
              out["poisson"] = r.poisson;
              out["obstruction"] = graded_terms(r.obstruction);
              return out;
          },
          py::arg("dims"), py::arg("coeffs"));

    m.def("moment_map",
          [](const std::vector<int>& dims, const std::string& coeffs) {
              SemiSimpleAlgebra S(dims);
              const MomentMapResult r = moment_map(S, tensor_from_pairs(S, coeffs));
              py::dict out;
              switch (r.status) {
                  case MomentMapResult::Status::Ok: out["status"] = "ok"; break;
                  case MomentMapResult::Status::NoMomentMap:
                      out["status"] = "NoMomentMap";
                      break;
                  case MomentMapResult::Status::NotPoisson:
                      out["status"] = "NotPoisson";
                      break;
                  case MomentMapResult::Status::SymbolicCoefficients:
                      out["status"] = "SymbolicCoefficients";
                      break;
              }
              if (r.status == MomentMapResult::Status::Ok) {
                  py::dict mu;
                  for (const auto& [i, v] : r.mu) mu[py::int_(i)] = to_string(v);
                  out["mu"] = mu;
              }
              return out;
          },
          py::arg("dims"), py::arg("coeffs"));

    m.def("betti_numbers",
          [](const std::vector<int>& dims, const std::string& coeffs, int max_degree) {
              SemiSimpleAlgebra S(dims);
              const Complex C = build_complex(S, tensor_from_pairs(S, coeffs), max_degree);
              std::vector<int> out;
              for (int i = 0; i <= max_degree; ++i) out.push_back(betti(C, i));
              return out;
          },
          py::arg("dims"), py::arg("coeffs"), py::arg("max_degree") = 2);

    m.def("free_product_bracket",
          [](int p, int q, const std::vector<int>& x, const std::vector<int>& y,
             const std::string& c, const std::string& d) {
              auto to_trace = [](const std::vector<int>& v) {
                  TraceWord w;
                  for (size_t i = 0; i + 1 < v.size(); i += 2) {
                      w.s.push_back(v[i]);
                      w.t.push_back(v[i + 1]);
                  }
                  return w;
              };
              const TraceSum r = induced_trace_bracket(
                  p, q, to_trace(x), to_trace(y),
                  c.empty() ? PairCoeffs{} : parse_coefficients(c),
                  d.empty() ? PairCoeffs{} : parse_coefficients(d));
              py::list out;
              for (const auto& [w, coeff] : r.terms()) {
                  py::list word;
                  for (const Letter& l : w)
                      word.append(py::make_tuple(l.in_t ? "f" : "e", l.idx));
                  py::dict term;
                  term["coeff"] = coeff.to_string();
                  term["word"] = word;
                  out.append(term);
              }
              return out;
          },
          py::arg("p"), py::arg("q"), py::arg("x"), py::arg("y"), py::arg("c") = "",
          py::arg("d") = "");
}
