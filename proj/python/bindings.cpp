// Python bindings for the detsat engine.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detsat/cyclic_family.hpp"
#include "detsat/errors.hpp"
#include "detsat/koszul_strand.hpp"
#include "detsat/verifier.hpp"

namespace py = pybind11;
using namespace detsat;

namespace {

/// Python-side handle on a shared ring context.
struct PyRing {
  Ring ring;
};

Field field_of(const std::string& text) { return Field::parse(text); }

PyRing make_ring(const py::object& vars, const std::string& field, const std::string& order) {
  const Field f = field_of(field);
  const MonomialOrder o = parse_order(order);
  if (py::isinstance<py::int_>(vars)) return {RingContext::standard(vars.cast<std::size_t>(), f, o)};
  return {RingContext::make(vars.cast<std::vector<std::string>>(), f, o)};
}

Polynomial to_poly(const Ring& ring, const py::handle& h) {
  if (py::isinstance<Polynomial>(h)) return h.cast<Polynomial>().map_to(ring);
  if (py::isinstance<py::str>(h)) return Polynomial::parse(ring, h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return Polynomial::constant(ring, h.cast<long>());
  throw py::type_error("expected a Polynomial, a string or an int");
}

std::vector<Polynomial> to_polys(const Ring& ring, const py::iterable& items) {
  std::vector<Polynomial> out;
  for (const auto& h : items) out.push_back(to_poly(ring, h));
  return out;
}

std::vector<std::vector<Polynomial>> vectors(const std::vector<ModuleVector>& vs) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

CyclicSpec spec_from(int m, const py::object& alpha) {
  CyclicSpec s;
  if (py::isinstance<py::str>(alpha)) {
    s = CyclicSpec::from_json(m, nlohmann::json(alpha.cast<std::string>()));
  } else {
    s.m = m;
    s.alpha = alpha.cast<std::vector<std::vector<int>>>();
  }
  s.validate();
  return s;
}

py::object parse_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_detsat, m) {
  m.doc() = "Exact commutative algebra for cyclic determinantal ideals";
  m.attr("__version__") = kVersion;

  // Translators are tried newest first, so the base class goes first.
  py::register_exception<Error>(m, "EngineError", PyExc_RuntimeError);
  py::register_exception<ResourceExhausted>(m, "ResourceExhausted", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<PyRing>(m, "Ring")
      .def(py::init(&make_ring), py::arg("variables"), py::arg("field") = "qq", py::arg("order") = "grevlex")
      .def_property_readonly("variables", [](const PyRing& r) { return r.ring->names(); })
      .def_property_readonly("field", [](const PyRing& r) { return r.ring->field().name(); })
      .def_property_readonly("order", [](const PyRing& r) { return std::string(r.ring->order().name()); })
      .def("__call__", [](const PyRing& r, const py::handle& h) { return to_poly(r.ring, h); })
      .def("__repr__", [](const PyRing& r) { return "Ring(" + py::repr(py::cast(r.ring->names())).cast<std::string>() +
                                                     ", " + r.ring->field().name() + ")"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("ring", [](const Polynomial& p) { return PyRing{p.ring()}; })
      .def("is_zero", &Polynomial::is_zero)
      .def("total_degree", &Polynomial::total_degree)
      .def("is_homogeneous", &Polynomial::is_homogeneous)
      .def("__len__", &Polynomial::size)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def("__hash__", [](const Polynomial& p) { return py::hash(py::str(p.to_string())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__add__", [](const Polynomial& a, long c) { return a + Polynomial::constant(a.ring(), c); })
      .def("__radd__", [](const Polynomial& a, long c) { return a + Polynomial::constant(a.ring(), c); })
      .def("__sub__", [](const Polynomial& a, long c) { return a - Polynomial::constant(a.ring(), c); })
      .def("__rsub__", [](const Polynomial& a, long c) { return Polynomial::constant(a.ring(), c) - a; })
      .def("__mul__", [](const Polynomial& a, long c) { return a * Polynomial::constant(a.ring(), c); })
      .def("__rmul__", [](const Polynomial& a, long c) { return a * Polynomial::constant(a.ring(), c); })
      .def("__pow__", &Polynomial::pow)
      .def("exact_divide", &Polynomial::exact_divide, "Quotient, or None when it does not exist")
      .def(
          "evaluate",
          [](const Polynomial& p, const std::vector<long>& point) {
            std::vector<FieldElement> pt;
            for (long v : point) pt.push_back(p.ring()->scalar(v));
            return p.evaluate(pt).to_string();
          },
          "Value at an integer point, as canonical text");

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const PyRing& r, const py::iterable& gens) { return Ideal(r.ring, to_polys(r.ring, gens)); }),
           py::arg("ring"), py::arg("generators"))
      .def_property_readonly("ring", [](const Ideal& I) { return PyRing{I.ring()}; })
      .def_property_readonly("generators", &Ideal::generators)
      .def("groebner_basis", [](const Ideal& I) { return I.groebner().basis(); })
      .def("groebner_basis_in", [](const Ideal& I, const std::string& order) {
        return I.groebner(parse_order(order)).basis();
      })
      .def("normal_form", [](const Ideal& I, const py::handle& f) { return I.normal_form(to_poly(I.ring(), f)); })
      .def("contains", [](const Ideal& I, const py::handle& x) {
        if (py::isinstance<Ideal>(x)) return I.contains(x.cast<Ideal>());
        return I.contains(to_poly(I.ring(), x));
      })
      .def("__contains__", [](const Ideal& I, const py::handle& f) { return I.contains(to_poly(I.ring(), f)); })
      .def("is_unit", &Ideal::is_unit)
      .def("is_zero", &Ideal::is_zero)
      .def("__len__", &Ideal::size)
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return ideal_equal(a, b); })
      .def("__add__", [](const Ideal& a, const Ideal& b) { return sum(a, b); })
      .def("__mul__", [](const Ideal& a, const Ideal& b) { return product(a, b); })
      .def("__pow__", [](const Ideal& a, int n) { return power(a, n); })
      .def("__repr__", [](const Ideal& I) { return "Ideal(" + I.to_json().dump() + ")"; });

  m.def("maximal_ideal", [](const PyRing& r) { return Ideal::maximal(r.ring); });
  m.def("intersect", &intersect);
  m.def("colon", py::overload_cast<const Ideal&, const Ideal&>(&colon));
  m.def("colon", [](const Ideal& I, const py::handle& f) { return colon(I, to_poly(I.ring(), f)); });
  m.def(
      "saturate",
      [](const Ideal& I, const Ideal& J) {
        Saturation s = saturate(I, J);
        return py::make_tuple(s.ideal, s.steps);
      },
      "Returns (saturation, number of strictly enlarging colon steps)");
  m.def("dimension", &dimension);
  m.def("height", &height);
  m.def("std_monomial_count", &std_monomial_count);
  m.def("ideal_equal", &ideal_equal);
  m.def("buchberger", [](const std::vector<Polynomial>& gens) { return buchberger(gens).basis(); });
  m.def(
      "syzygies",
      [](const std::vector<Polynomial>& ps) { return vectors(syzygies(ps).generators); },
      "Generators of the syzygy module as coordinate lists");

  py::class_<PolyMatrix>(m, "PolyMatrix")
      .def(py::init([](const PyRing& r, const std::vector<py::list>& rows) {
             std::vector<std::vector<Polynomial>> ps;
             for (const auto& row : rows) ps.push_back(to_polys(r.ring, row));
             return PolyMatrix::from_rows(r.ring, ps);
           }),
           py::arg("ring"), py::arg("rows"))
      .def_property_readonly("shape", [](const PolyMatrix& a) { return py::make_tuple(a.rows(), a.cols()); })
      .def("rows_list", [](const PolyMatrix& a) {
        std::vector<std::vector<Polynomial>> out;
        for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a.row(i));
        return out;
      })
      .def("__getitem__", [](const PolyMatrix& a, std::pair<std::size_t, std::size_t> ij) {
        if (ij.first >= a.rows() || ij.second >= a.cols()) throw py::index_error();
        return a(ij.first, ij.second);
      })
      .def("transpose", &PolyMatrix::transpose)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const PolyMatrix& a) { return "PolyMatrix(" + a.to_json().dump() + ")"; });

  m.def("determinant", &determinant);
  m.def("determinant_bareiss", &determinant_bareiss);
  m.def("minors_ideal", &minors_ideal);
  m.def("signed_max_minors", &signed_max_minors);
  m.def(
      "rank",
      [](const PolyMatrix& a, unsigned trials, std::uint64_t seed, bool symbolic) {
        return parse_json(rank(a, {trials, seed, symbolic}).to_json());
      },
      py::arg("matrix"), py::arg("trials") = 3, py::arg("seed") = 0x5eed, py::arg("symbolic") = false);

  py::class_<CyclicFamily>(m, "CyclicFamily")
      .def_property_readonly("m", [](const CyclicFamily& f) { return f.spec.m; })
      .def_property_readonly("alpha", [](const CyclicFamily& f) { return f.spec.alpha; })
      .def_property_readonly("ring", [](const CyclicFamily& f) { return PyRing{f.ring}; })
      .def_readonly("M", &CyclicFamily::M)
      .def_readonly("a", &CyclicFamily::a)
      .def_readonly("I", &CyclicFamily::I)
      .def_readonly("maximal", &CyclicFamily::maximal)
      .def_readonly("J", &CyclicFamily::J)
      .def_readonly("y", &CyclicFamily::y)
      .def_readonly("Q", &CyclicFamily::Q)
      .def_readonly("Q_prime", &CyclicFamily::Qprime)
      .def_readonly("A", &CyclicFamily::A)
      .def_readonly("alpha_sum", &CyclicFamily::alpha_sum)
      .def_property_readonly("beta", [](const CyclicFamily& f) { return f.beta.beta; })
      .def_property_readonly("selectors", [](const CyclicFamily& f) { return f.beta.selector; })
      .def_property_readonly("x_prime", [](const CyclicFamily& f) { return f.beta.xprime; })
      .def_property_readonly("b", [](const CyclicFamily& f) { return f.delta.b; })
      .def_property_readonly("delta", [](const CyclicFamily& f) { return f.delta.delta; })
      .def("minors_ideal", &CyclicFamily::minors_ideal, py::return_value_policy::copy)
      .def("lambda_set", [](const CyclicFamily& f, int n) { return lambda_set(f, n); })
      .def("congruence", [](const CyclicFamily& f) {
        const CongruenceResult r = delta_congruence_check(f);
        return py::make_tuple(r.sign, r.exponent, r.target);
      });

  m.def(
      "build",
      [](int mm, const py::object& alpha, const std::optional<std::string>& field, const std::string& order) {
        const CyclicSpec s = spec_from(mm, alpha);
        return build(s, field ? field_of(*field) : default_field(mm), parse_order(order));
      },
      py::arg("m"), py::arg("alpha") = "ones", py::arg("field") = py::none(), py::arg("order") = "grevlex");

  m.def(
      "strand_summary",
      [](const CyclicFamily& f, int n) {
        const StrandComplex c = strand(f, n);
        std::vector<std::size_t> ranks;
        for (int r = 0; r <= f.spec.m; ++r) ranks.push_back(c.rank(r));
        const ExactnessCertificate cert = is_exact(c);
        py::dict out;
        out["ranks"] = ranks;
        out["complex"] = !composition_defect(c).has_value();
        out["minimal"] = is_minimal(c);
        out["exact"] = cert.exact;
        if (cert.exact && is_minimal(c)) {
          const PdDepth pd = pd_depth(c, cert);
          out["pd"] = pd.pd;
          out["depth"] = pd.depth;
        }
        return out;
      },
      py::arg("family"), py::arg("n"));

  m.def(
      "verify",
      [](int mm, const py::object& alpha, const std::vector<std::string>& suites,
         const std::optional<std::string>& field, const std::string& order, const std::vector<int>& ns,
         std::uint64_t seed, bool timings) {
        RunOptions o;
        o.spec = spec_from(mm, alpha);
        o.suites = suites;
        if (field) o.field = field_of(*field);
        o.order = order;
        o.ns = ns;
        o.seed = seed;
        o.timings = timings;
        Report r;
        {
          py::gil_scoped_release release;
          r = run(o);
        }
        return parse_json(r.to_json());
      },
      py::arg("m"), py::arg("alpha") = "ones", py::arg("suites") = std::vector<std::string>{"all"},
      py::arg("field") = py::none(), py::arg("order") = "grevlex", py::arg("ns") = std::vector<int>{},
      py::arg("seed") = 1, py::arg("timings") = true);
}
