#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "behrend/commands.hpp"
#include "behrend/errors.hpp"
#include "behrend/expr.hpp"
#include "behrend/newton.hpp"
#include "behrend/normal_factor.hpp"
#include "behrend/nu.hpp"
#include "behrend/oracle.hpp"
#include "behrend/towers.hpp"

namespace py = pybind11;

// Python int <-> Int through the decimal string, so sizes are unbounded.
namespace pybind11::detail {
template <>
struct type_caster<behrend::Int> {
  PYBIND11_TYPE_CASTER(behrend::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!text) {
      PyErr_Clear();
      return false;
    }
    value = behrend::Int(text.cast<std::string>());
    return true;
  }

  static handle cast(const behrend::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace behrend;

MonomialIdeal ideal(const std::string& expr) { return monomial_ideal(evaluate(expr)); }

Tower tower(const std::string& branch, const std::vector<Int>& exponents) {
  if (branch != "x" && branch != "y") throw DomainError("branch must be 'x' or 'y'");
  return make_tower(branch == "x" ? Branch::X : Branch::Y, {}, exponents);
}

py::dict verify(const std::string& bounds, std::uint64_t seed) {
  VerifyReport r = verify_all(bounds_preset(bounds), seed);
  py::list results;
  for (const auto& c : r.results) {
    py::dict d;
    d["name"] = c.name;
    d["instance"] = c.instance;
    d["expected"] = c.expected;
    d["actual"] = c.actual;
    d["status"] = status_name(c.status);
    results.append(d);
  }
  py::dict out;
  out["passed"] = r.passed;
  out["failed"] = r.failed;
  out["inconclusive"] = r.inconclusive;
  out["results"] = results;
  return out;
}

}  // namespace

PYBIND11_MODULE(_behrend, m) {
  m.doc() = "Length, normalization and Behrend number of fat points in the plane";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", error.ptr());

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def(
      "run",
      [](const std::string& command, const std::string& expr, const std::string& format,
         std::uint64_t seed, const std::string& bounds, std::optional<unsigned> p_max) {
        RunOptions o;
        if (format != "text" && format != "json") throw DomainError("format must be text or json");
        o.format = format == "json" ? Format::Json : Format::Text;
        o.seed = seed;
        o.bounds = bounds;
        o.p_max = p_max;
        return run(command, expr, o).output;
      },
      py::arg("command"), py::arg("expr") = "", py::arg("format") = "text", py::arg("seed") = 1,
      py::arg("bounds") = "default", py::arg("p_max") = py::none(),
      "Run one CLI command and return its output text.");

  m.def(
      "svg",
      [](const std::string& command, const std::string& expr) {
        RunOptions o;
        o.svg = true;
        return *run(command, expr, o).svg;
      },
      py::arg("command"), py::arg("expr"), "SVG picture for fan, dynkin or ferrers.");

  m.def(
      "canonical", [](const std::string& expr) { return to_string(evaluate(expr)); },
      py::arg("expr"));
  m.def(
      "generators",
      [](const std::string& expr) {
        std::vector<std::pair<Int, Int>> out;
        for (const auto& g : minimal_generators(ideal(expr)).generators()) out.emplace_back(g.a, g.b);
        return out;
      },
      py::arg("expr"), "Minimal generators (a, b) of x^a y^b, by increasing a.");
  m.def(
      "colength", [](const std::string& expr) { return colength(ideal(expr)); }, py::arg("expr"));
  m.def(
      "nu", [](const std::string& expr) { return nu_monomial(ideal(expr)).nu; }, py::arg("expr"));
  m.def(
      "integral_closure",
      [](const std::string& expr) { return to_string(integral_closure(ideal(expr))); },
      py::arg("expr"));
  m.def(
      "is_normal", [](const std::string& expr) { return is_normal(ideal(expr)); },
      py::arg("expr"));
  m.def(
      "factor_normal",
      [](const std::string& expr) {
        std::vector<std::tuple<Int, Int, Int>> out;
        for (const auto& f : factor_normal(ideal(expr))) out.emplace_back(f.alpha, f.beta, f.delta);
        return out;
      },
      py::arg("expr"), "(alpha, beta, delta) per factor n(alpha, beta)^delta.");
  m.def(
      "fan_rays",
      [](const std::string& expr) {
        std::vector<std::pair<Int, Int>> out;
        for (const auto& r : fan_of(ideal(expr)).rays) out.emplace_back(r.x, r.y);
        return out;
      },
      py::arg("expr"));

  m.def(
      "tower_length", [](const std::string& b, const std::vector<Int>& e) {
        return tower_length(tower(b, e));
      },
      py::arg("branch"), py::arg("exponents"));
  m.def(
      "tower_nu", [](const std::string& b, const std::vector<Int>& e) {
        return tower_nu(tower(b, e));
      },
      py::arg("branch"), py::arg("exponents"));
  m.def(
      "product_nu",
      [](const std::string& expr) {
        Value v = evaluate(expr);
        auto* p = std::get_if<FactorProduct>(&v);
        if (!p) throw UnsupportedError(to_string(v) + " is not a product of towers");
        return factors_nu(p->factors()).nu;
      },
      py::arg("expr"), "Behrend number of a product of towers through the Dynkin diagram.");

  m.def("verify", &verify, py::arg("bounds") = "quick", py::arg("seed") = 1);
}
