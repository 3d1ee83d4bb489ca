// Python bindings for the main operations. Exact values cross the
// boundary either as QuadraticNumber objects or as Python ints.

#include "sturmian/abelian.hpp"
#include "sturmian/bijection.hpp"
#include "sturmian/formulas.hpp"
#include "sturmian/numtheory.hpp"
#include "sturmian/verify.hpp"
#include "sturmian/words.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sturmian;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

QuadraticNumber as_quadratic(const py::object& v) {
  if (py::isinstance<QuadraticNumber>(v)) return v.cast<QuadraticNumber>();
  if (py::isinstance<py::bool_>(v)) throw py::type_error("expected a QuadraticNumber, int or str");
  if (py::isinstance<py::int_>(v)) return QuadraticNumber(from_py(v.cast<py::int_>()));
  if (py::isinstance<py::str>(v)) return parse_quadratic(v.cast<std::string>());
  throw py::type_error("expected a QuadraticNumber, int or str");
}

QuadraticNumber slope(const py::object& v, bool periodic) {
  if (py::isinstance<py::str>(v)) return parse_slope(v.cast<std::string>(), periodic);
  return as_quadratic(v);
}

py::dict factorization_dict(const AbelianFactorization& f) {
  py::dict d;
  d["period"] = f.period;
  d["head"] = f.head;
  d["blocks"] = f.blocks;
  d["tail"] = f.tail;
  d["length"] = f.length();
  d["block_parikh"] = f.block_parikh.counts();
  d["exponent"] = f.exponent();
  return d;
}

}  // namespace

PYBIND11_MODULE(_sturmian, m) {
  m.doc() = "Sturmian words, the Sturmian bijection and abelian repetitions";

  py::class_<QuadraticNumber>(m, "QuadraticNumber")
      .def(py::init([](const py::object& v) { return as_quadratic(v); }), py::arg("value") = py::int_(0))
      .def_static("make",
                  [](const py::int_& p, const py::int_& q, const py::int_& r, std::int64_t d) {
                    return QuadraticNumber::make(from_py(p), from_py(q), from_py(r), d);
                  })
      .def_static("rational", [](const py::int_& n, const py::int_& d) { return QuadraticNumber::rational(from_py(n), from_py(d)); })
      .def_static("sqrt", &QuadraticNumber::sqrt)
      .def_static("golden_ratio", &QuadraticNumber::golden_ratio)
      .def_property_readonly("p", [](const QuadraticNumber& x) { return to_py(x.p()); })
      .def_property_readonly("q", [](const QuadraticNumber& x) { return to_py(x.q()); })
      .def_property_readonly("r", [](const QuadraticNumber& x) { return to_py(x.r()); })
      .def_property_readonly("d", &QuadraticNumber::d)
      .def("is_rational", &QuadraticNumber::is_rational)
      .def("floor", [](const QuadraticNumber& x) { return to_py(qfloor(x)); })
      .def("frac", [](const QuadraticNumber& x) { return qfrac(x); })
      .def("sign", [](const QuadraticNumber& x) { return qsign(x); })
      .def("decimal", [](const QuadraticNumber& x, int digits) { return approx_decimal(x, digits); }, py::arg("digits") = 6)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__float__", [](const QuadraticNumber& x) { return std::stod(approx_decimal(x, 17)); })
      .def("__hash__", [](const QuadraticNumber& x) { return py::hash(py::str(to_string(x))); })
      .def("__str__", [](const QuadraticNumber& x) { return to_string(x); })
      .def("__repr__", [](const QuadraticNumber& x) { return "QuadraticNumber('" + to_string(x) + "')"; })
      .def(py::pickle([](const QuadraticNumber& x) { return to_string(x); },
                      [](const std::string& s) { return parse_quadratic(s); }));

  m.def("approx_decimal", &approx_decimal, py::arg("x"), py::arg("digits"));
  m.def("golden_slope", &golden_slope, "phi - 1");
  m.def("fibonacci", [](std::size_t j) { return to_py(fibonacci(j)); }, py::arg("j"));

  m.def(
      "convergents",
      [](const py::object& alpha, std::size_t count) {
        py::list out;
        for (const auto& c : convergents(as_quadratic(alpha), count)) out.append(py::make_tuple(to_py(c.numerator), to_py(c.denominator)));
        return out;
      },
      py::arg("alpha"), py::arg("count"));

  m.def(
      "sturmian_prefix",
      [](const py::object& alpha, std::uint64_t length, const py::object& rho, bool periodic) {
        return sturmian_prefix(SturmianParams(slope(alpha, periodic), as_quadratic(rho), periodic), length).str();
      },
      py::arg("alpha"), py::arg("length"), py::arg("rho") = py::int_(0), py::arg("periodic") = false);

  m.def("fibonacci_word", [](std::size_t j) { return fibonacci_word(j).str(); }, py::arg("j"));

  m.def(
      "all_factors",
      [](const py::object& alpha, std::size_t length, bool periodic) {
        const QuadraticNumber a = slope(alpha, periodic);
        const IntervalPartition part = partition(a, length);
        const std::size_t holder = part.locate(a);
        py::list out;
        for (const auto& f : all_factors(part)) {
          py::dict d;
          d["k"] = f.k;
          d["left"] = f.left;
          d["right"] = f.right;
          d["factor"] = f.factor.str();
          d["parikh_class"] = f.parikh_class == ParikhClass::v1 ? "v1" : "v2";
          d["contains_alpha"] = f.k == holder;
          out.append(d);
        }
        return out;
      },
      py::arg("alpha"), py::arg("m"), py::arg("periodic") = false);

  m.def(
      "parikh_split",
      [](const py::object& alpha, std::size_t length) {
        const ParikhSplit s = parikh_split(slope(alpha, false), length);
        return py::make_tuple(s.v1.counts(), s.v2.counts(), s.boundary);
      },
      py::arg("alpha"), py::arg("m"));

  m.def(
      "min_abelian_period",
      [](const std::string& w, const std::string& tier) -> py::object {
        if (tier != "relaxed" && tier != "repetition") throw py::value_error("tier must be 'relaxed' or 'repetition'");
        const auto f = min_abelian_period(Word(w), tier == "relaxed" ? Tier::relaxed : Tier::repetition);
        if (!f) return py::none();
        return factorization_dict(*f);
      },
      py::arg("word"), py::arg("tier") = "relaxed");

  m.def(
      "longest_prefix_rep",
      [](const py::object& alpha, std::size_t period) -> py::object {
        const auto rep = longest_prefix_rep(slope(alpha, false), period);
        if (!rep) return py::none();
        return factorization_dict(rep->factorization);
      },
      py::arg("alpha"), py::arg("m"));

  m.def(
      "k_m_empirical",
      [](const py::object& alpha, std::size_t period, std::size_t length) -> py::object {
        const auto k = k_m_empirical(slope(alpha, false), period, length);
        if (!k) return py::none();
        return py::cast(*k);
      },
      py::arg("alpha"), py::arg("m"), py::arg("n"));

  m.def(
      "theorem6_predicate",
      [](const py::object& alpha, std::uint64_t period, std::uint64_t k, bool strong) {
        return theorem6_predicate(slope(alpha, false), period, k, strong);
      },
      py::arg("alpha"), py::arg("m"), py::arg("k"), py::arg("strong") = false);

  m.def("lp_formula", [](std::size_t j) { return to_py(lp_formula(j)); }, py::arg("j"));
  m.def("max_exp_formula", [](std::size_t j) { return to_py(max_exp_formula(j)); }, py::arg("j"));
  m.def("min_ab_period_fib", [](std::size_t j) { return to_py(min_ab_period_fib(j)); }, py::arg("j"));
  m.def("sqrt5_gap_percent", &sqrt5_gap_percent, py::arg("j"), py::arg("digits"));

  m.def(
      "run_verify",
      [](const std::string& target, std::optional<std::string> j, std::optional<std::size_t> max_m,
         std::optional<std::size_t> max_k) {
        VerifyOptions opts;
        if (j) opts.j = parse_index_range(*j);
        opts.max_m = max_m;
        opts.max_k = max_k;
        const VerifyReport report = run_verify(parse_target(target), opts);
        py::list rows;
        for (const auto& r : report.rows) {
          py::dict d;
          d["label"] = r.label;
          d["expected"] = r.expected;
          d["actual"] = r.actual;
          d["pass"] = r.pass;
          rows.append(d);
        }
        py::dict out;
        out["target"] = report.target;
        out["passed"] = report.passed();
        out["rows"] = rows;
        return out;
      },
      py::arg("target"), py::arg("j") = py::none(), py::arg("max_m") = py::none(), py::arg("max_k") = py::none());
}
