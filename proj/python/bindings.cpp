#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lucasnomial/errors.hpp"
#include "lucasnomial/interpretations.hpp"
#include "lucasnomial/lucas.hpp"
#include "lucasnomial/lucasnomial.hpp"
#include "lucasnomial/partitions.hpp"
#include "lucasnomial/polynomial.hpp"
#include "lucasnomial/report.hpp"
#include "lucasnomial/specializations.hpp"
#include "lucasnomial/tilings.hpp"

namespace py = pybind11;
using namespace lucasnomial;

namespace {

py::int_ to_py(const Integer& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& value) { return Integer(py::str(py::handle(value)).cast<std::string>()); }

py::list coefficient_list(const UnivariatePolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) {
        out.append(to_py(c));
    }
    return out;
}

py::object specialized_to_py(const SpecializedValue& value) {
    if (const auto* integer = std::get_if<Integer>(&value)) {
        return to_py(*integer);
    }
    return coefficient_list(std::get<UnivariatePolynomial>(value));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Lucas polynomial and lucasnomial computations";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<IndivisibleError>(m, "IndivisibleError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<InternalParityError>(m, "InternalParityError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<BivariatePolynomial>(m, "Polynomial")
        .def(py::init<>())
        .def(py::init([](const std::string& text) { return parse_polynomial(text); }), py::arg("text"))
        .def_static("s", &BivariatePolynomial::s)
        .def_static("t", &BivariatePolynomial::t)
        .def_static("from_json", [](const std::string& text) {
            return polynomial_from_json(nlohmann::json::parse(text));
        })
        .def("terms",
             [](const BivariatePolynomial& p) {
                 py::list out;
                 for (const auto& [mono, c] : p.terms()) {
                     out.append(py::make_tuple(mono.s_exp, mono.t_exp, to_py(c)));
                 }
                 return out;
             },
             "List of (s_exp, t_exp, coefficient) in canonical order")
        .def("eval", [](const BivariatePolynomial& p, const py::int_& s0,
                        const py::int_& t0) { return to_py(eval_int(p, from_py(s0), from_py(t0))); })
        .def("q_specialize",
             [](const BivariatePolynomial& p) {
                 const auto q = UnivariatePolynomial::q();
                 return coefficient_list(subst_univar(p, q + UnivariatePolynomial::constant(1), -q));
             },
             "Coefficients of p(q + 1, -q), lowest degree first")
        .def("exact_div", [](const BivariatePolynomial& p,
                             const BivariatePolynomial& d) { return exact_div(p, d); })
        .def("is_zero", &BivariatePolynomial::is_zero)
        .def("latex", [](const BivariatePolynomial& p) { return to_latex(p); })
        .def("to_json", [](const BivariatePolynomial& p) { return to_json(p).dump(); })
        .def("__str__", [](const BivariatePolynomial& p) { return to_canonical_text(p); })
        .def("__repr__",
             [](const BivariatePolynomial& p) { return "Polynomial('" + to_canonical_text(p) + "')"; })
        .def("__eq__", [](const BivariatePolynomial& a, const BivariatePolynomial& b) { return a == b; })
        .def("__add__", [](const BivariatePolynomial& a, const BivariatePolynomial& b) { return a + b; })
        .def("__sub__", [](const BivariatePolynomial& a, const BivariatePolynomial& b) { return a - b; })
        .def("__mul__", [](const BivariatePolynomial& a, const BivariatePolynomial& b) { return a * b; })
        .def("__neg__", [](const BivariatePolynomial& a) { return -a; });

    m.def("lucas_F", [](unsigned n) { return lucas_F(n); }, py::arg("n"));
    m.def("lucas_L", [](unsigned n) { return lucas_L(n); }, py::arg("n"));
    m.def("lucas_factorial", [](unsigned n) { return lucas_factorial(n); }, py::arg("n"));

    m.def("lucasnomial",
          [](int n, int k, const std::string& method) { return ::lucasnomial::lucasnomial(n, k, parse_method(method)); },
          py::arg("n"), py::arg("k"), py::arg("method") = "rec-fib");
    m.def("table", [](int N) { return table(N).rows(); }, py::arg("N"));

    m.def("tilings",
          [](const std::string& kind, unsigned n) {
              std::vector<std::pair<std::string, BivariatePolynomial>> out;
              for (const auto& tiling : enumerate(parse_strip_kind(kind), n)) {
                  out.emplace_back(to_text(tiling), weight(tiling));
              }
              return out;
          },
          py::arg("kind"), py::arg("n"), "List of (tiling text, weight)");
    m.def("tiling_gf", [](const std::string& kind, unsigned n) { return gf(parse_strip_kind(kind), n); },
          py::arg("kind"), py::arg("n"));

    m.def("partitions",
          [](unsigned rows, unsigned cols) {
              std::vector<std::vector<unsigned>> out;
              for (const auto& lambda : enumerate_in_rect(rows, cols)) {
                  out.push_back(lambda.parts);
              }
              return out;
          },
          py::arg("m"), py::arg("n"));
    m.def("complement",
          [](std::vector<unsigned> parts, unsigned rows, unsigned cols) {
              return complement(make_partition(std::move(parts), rows, cols)).parts;
          },
          py::arg("parts"), py::arg("m"), py::arg("n"));

    m.def("rhs_linear",
          [](unsigned rows, unsigned cols, const std::string& mode) { return rhs_linear(rows, cols, parse_mode(mode)); },
          py::arg("m"), py::arg("n"), py::arg("mode") = "gf");
    m.def("rhs_circular",
          [](unsigned rows, unsigned cols, const std::string& mode) {
              return rhs_circular(rows, cols, parse_mode(mode));
          },
          py::arg("m"), py::arg("n"), py::arg("mode") = "gf");

    m.def("_verify_json",
          [](const std::string& identity, unsigned m_max, unsigned n_max, const std::string& mode,
             const std::string& flavor, bool parallel) {
              VerifyOptions options;
              options.parallel = parallel;
              IdentityReport report;
              {
                  py::gil_scoped_release release;
                  if (identity == "theorem") {
                      report = verify_theorem(m_max, n_max, parse_flavor(flavor), parse_mode(mode), options);
                  } else if (identity == "recursions") {
                      report = verify_recursions(n_max, options);
                  } else if (identity == "lemma1") {
                      report = verify_lemma1(m_max, n_max, options);
                  } else {
                      throw DomainError("unknown identity " + identity);
                  }
              }
              return to_json(report).dump();
          });

    m.def("specialize",
          [](int n, int k, const std::string& preset, std::optional<long> ell) {
              SpecializationPreset p;
              if (preset == "fibonomial") {
                  p = SpecializationPreset::fibonomial();
              } else if (preset == "qbinomial") {
                  p = SpecializationPreset::qbinomial();
              } else if (preset == "lnomial") {
                  if (!ell) {
                      throw DomainError("lnomial requires ell");
                  }
                  p = SpecializationPreset::lnomial(*ell);
              } else {
                  throw DomainError("unknown preset " + preset);
              }
              return specialized_to_py(specialize(n, k, p));
          },
          py::arg("n"), py::arg("k"), py::arg("preset"), py::arg("ell") = py::none(),
          "Integer for fibonomial/lnomial, q-coefficient list (lowest first) for qbinomial");
    m.def("gaussian_binomial", [](int n, int k) { return coefficient_list(gaussian_binomial_oracle(n, k)); },
          py::arg("n"), py::arg("k"));
}
