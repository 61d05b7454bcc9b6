#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkagc/codes.hpp"
#include "gkagc/intersect.hpp"
#include "gkagc/selftest.hpp"

namespace py = pybind11;
using namespace gkagc;

namespace {

Orbit orbit_from(const std::string& s) {
  if (s == "O1") return Orbit::O1;
  if (s == "O2") return Orbit::O2;
  throw std::invalid_argument("orbit must be 'O1' or 'O2'");
}

struct PyField {
  std::shared_ptr<const Field> f;
  int p() const { return f->p(); }
  int m() const { return f->m(); }
  std::uint32_t size() const { return f->size(); }
  std::uint32_t generator() const { return f->generator(); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return f->add(Field::Elt(a), Field::Elt(b));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return f->mul(Field::Elt(a), Field::Elt(b));
  }
  std::uint32_t inv(std::uint32_t a) const { return f->inv(Field::Elt(a)); }
  std::uint32_t pow(std::uint32_t a, long long n) const { return f->pow(Field::Elt(a), n); }
  std::uint32_t frobenius(std::uint32_t a, int r) const {
    return f->frobenius(Field::Elt(a), r);
  }
};

struct PySemigroup {
  NumericalSemigroup s;
};

CurvePoint point_from(const py::object& obj) {
  if (obj.is_none()) return CurvePoint::at_infinity();
  const auto t = obj.cast<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>();
  return CurvePoint::affine(Field::Elt(std::get<0>(t)), Field::Elt(std::get<1>(t)),
                            Field::Elt(std::get<2>(t)));
}

py::object point_to(const CurvePoint& p) {
  if (p.infinite) return py::none();
  return py::make_tuple(p.x, p.y, p.z);
}

}  // namespace

PYBIND11_MODULE(_gkagc, mod) {
  mod.doc() = "one-point AG codes on the GK curves over GF(64) and GF(729)";

  py::class_<PyField>(mod, "Field")
      .def_static("create",
                  [](int p, int m, const std::vector<int>& irr) {
                    return PyField{Field::create(p, m, irr)};
                  })
      .def_static("gf64", [] { return PyField{Field::gf64()}; })
      .def_static("gf729", [] { return PyField{Field::gf729()}; })
      .def_property_readonly("p", &PyField::p)
      .def_property_readonly("m", &PyField::m)
      .def_property_readonly("size", &PyField::size)
      .def_property_readonly("generator", &PyField::generator)
      .def("add", &PyField::add)
      .def("mul", &PyField::mul)
      .def("inv", &PyField::inv)
      .def("pow", &PyField::pow)
      .def("frobenius", &PyField::frobenius);

  py::class_<PySemigroup>(mod, "NumericalSemigroup")
      .def_static("from_generators",
                  [](const std::vector<long long>& g) {
                    return PySemigroup{NumericalSemigroup::from_generators(g)};
                  })
      .def_property_readonly("generators",
                             [](const PySemigroup& s) { return s.s.generators(); })
      .def_property_readonly("genus", [](const PySemigroup& s) { return s.s.genus(); })
      .def_property_readonly("conductor", [](const PySemigroup& s) { return s.s.conductor(); })
      .def_property_readonly("gaps", [](const PySemigroup& s) { return s.s.gaps(); })
      .def("contains", [](const PySemigroup& s, long long n) { return s.s.contains(n); })
      .def("rho", [](const PySemigroup& s, long long l) { return s.s.rho(l); })
      .def("nu", [](const PySemigroup& s, long long l) { return s.s.nu(l); })
      .def("order_bound", [](const PySemigroup& s, long long l) { return s.s.order_bound(l); })
      .def("r_d", [](const PySemigroup& s, long long d) { return s.s.r_d(d); });

  mod.def("gk_semigroup", [](int qbar, const std::string& orbit) {
    return PySemigroup{gk_semigroup(qbar, orbit_from(orbit))};
  });

  mod.def("enumerate_points", [](int qbar) {
    py::list out;
    for (const auto& p : enumerate_points(CurveParams::make(qbar))) out.append(point_to(p));
    return out;
  });

  mod.def("orbit_census", [](int qbar) {
    return orbit_census(enumerate_points(CurveParams::make(qbar)));
  });

  mod.def("genus", [](int qbar) { return CurveParams::make(qbar).genus; });

  mod.def("designated_o2_point",
          [](int qbar) { return point_to(designated_o2_point(CurveParams::make(qbar))); });

  mod.def(
      "parity_matrix_cl",
      [](int qbar, const std::string& orbit, long long ell) {
        return parity_matrix_Cl(CurveParams::make(qbar), orbit_from(orbit), ell).rows;
      },
      py::arg("qbar"), py::arg("orbit"), py::arg("ell"));

  mod.def(
      "parity_matrix_improved",
      [](int qbar, const std::string& orbit, long long d) {
        return parity_matrix_improved(CurveParams::make(qbar), orbit_from(orbit), d).rows;
      },
      py::arg("qbar"), py::arg("orbit"), py::arg("d"));

  mod.def("rank", [](int qbar, const std::vector<std::vector<Field::Elt>>& rows) {
    return rank(*CurveParams::make(qbar).field, rows);
  });

  mod.def("min_distance_bruteforce",
          [](int qbar, const std::vector<std::vector<Field::Elt>>& rows, int k_limit) {
            return min_distance_bruteforce(*CurveParams::make(qbar).field, rows, k_limit);
          },
          py::arg("qbar"), py::arg("rows"), py::arg("k_limit") = 3);

  mod.def("imult", [](int qbar, const std::vector<std::tuple<int, int, std::uint32_t>>& F,
                      const std::vector<std::tuple<int, int, std::uint32_t>>& G) -> py::object {
    const auto params = CurveParams::make(qbar);
    PlaneCurve pf(params.field), pg(params.field);
    for (const auto& [dy, dz, c] : F) pf.add_term(dy, dz, Field::Elt(c));
    for (const auto& [dy, dz, c] : G) pg.add_term(dy, dz, Field::Elt(c));
    const auto m = imult_origin(pf, pg);
    if (m.infinite) return py::none();
    return py::int_(m.value);
  });

  mod.def("certify_generators", [](int qbar) {
    const auto params = CurveParams::make(qbar);
    const auto bp = BasePoint::o2(params, designated_o2_point(params));
    py::dict out;
    for (const auto& g : bp.generators()) {
      if (auto expansion = bp.barred_expansion(g.name)) {
        const auto rep = certify_barred_function(bp, *expansion);
        out[py::str(g.name)] = py::make_tuple(rep.M, rep.N);
      }
    }
    return out;
  });

  mod.def("search_nongaps", [](int qbar, const py::object& point) {
    const auto params = CurveParams::make(qbar);
    const CurvePoint P = point.is_none() ? designated_o2_point(params) : point_from(point);
    py::list out;
    for (const auto& w : search_nongaps(params, P, standard_search_system()))
      out.append(py::make_tuple(w.N, w.M, w.coeffs));
    return out;
  }, py::arg("qbar"), py::arg("point") = py::none());

  mod.def("improvements", [] {
    py::list out;
    for (const auto& c : improvements_table()) out.append(py::make_tuple(c.n, c.k, c.d));
    return out;
  });

  mod.def(
      "selftest",
      [](int qbar, bool big) {
        py::list out;
        for (const auto& r : run_selftest(qbar, big))
          out.append(py::dict(py::arg("id") = r.id, py::arg("label") = r.label,
                              py::arg("pass") = r.pass, py::arg("detail") = r.detail));
        return out;
      },
      py::arg("qbar") = 0, py::arg("big") = false);
}
