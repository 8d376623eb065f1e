// Python bindings. Matrices cross the boundary as lists of rows of Python
// ints; polynomials as coefficient lists, lowest degree first.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hookzeta/craig.hpp"
#include "hookzeta/error.hpp"
#include "hookzeta/specht.hpp"
#include "hookzeta/verify.hpp"
#include "hookzeta/zeta.hpp"

namespace py = pybind11;
using namespace hookzeta;

namespace {

py::int_ to_py(const Int& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

IntMatrix matrix_from_py(const py::sequence& rows) {
  const std::size_t r = py::len(rows);
  if (r == 0) throw Error(ErrorKind::InvalidInput, "empty matrix");
  const std::size_t c = py::len(rows[0]);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    py::sequence row = rows[i];
    if (py::len(row) != c) throw Error(ErrorKind::InvalidInput, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::list to_py(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::list to_py(const std::vector<Int>& v) {
  py::list out;
  for (const auto& c : v) out.append(to_py(c));
  return out;
}

py::list to_py(const std::vector<LatticeBasis>& v) {
  py::list out;
  for (const auto& l : v) out.append(to_py(l.hnf()));
  return out;
}

py::list to_py(const RepGenerators& g) {
  py::list out;
  for (const auto& m : g.mats) out.append(to_py(m));
  return out;
}

py::dict to_py(const GlobalZeta& z) {
  py::dict factors;
  for (const auto& [p, poly] : z.local_factors) factors[py::int_(p)] = to_py(poly);
  py::dict out;
  out["n"] = z.n;
  out["d"] = z.d;
  out["riemann_exponent"] = z.riemann_exponent;
  out["local_factors"] = factors;
  return out;
}

RepGenerators gens_from_py(const py::sequence& mats) {
  RepGenerators g;
  for (const auto& m : mats) g.mats.push_back(matrix_from_py(py::reinterpret_borrow<py::sequence>(m)));
  g.n = g.mats.empty() ? 0 : static_cast<int>(g.mats.front().rows());
  return g;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice and zeta function computations for the hook representation";

  py::register_exception<Error>(m, "HookZetaError", PyExc_ValueError);

  m.def("hnf", [](const py::sequence& rows) { return to_py(hnf(matrix_from_py(rows))); }, py::arg("matrix"));
  m.def("lattice_index",
        [](const py::sequence& sup, const py::sequence& sub) {
          return to_py(lattice_index(LatticeBasis(matrix_from_py(sup)), LatticeBasis(matrix_from_py(sub))));
        },
        py::arg("sup"), py::arg("sub"));

  m.def("craig_generators", [](int n) { return to_py(craig_generators(n)); }, py::arg("n"));
  m.def("specht_generators",
        [](int n, bool oracle) { return to_py(oracle ? specht_generators_oracle(n) : specht_generators_closed(n)); },
        py::arg("n"), py::arg("oracle") = false);
  m.def("coxeter_ok", [](const py::sequence& mats) { return verify_coxeter(gens_from_py(mats)); },
        py::arg("generators"));
  m.def("intertwiner",
        [](const py::sequence& a, const py::sequence& b) { return to_py(intertwiner(gens_from_py(a), gens_from_py(b))); },
        py::arg("a"), py::arg("b"));
  m.def("identify_specht_lattice", &identify_specht_lattice, py::arg("n"));

  m.def("craig_lattice", [](int n, long d) { return to_py(craig_lattice(n, d).basis.basis()); }, py::arg("n"),
        py::arg("d"));
  m.def("is_g_stable",
        [](int n, const py::sequence& basis) {
          return is_g_stable(LatticeBasis(matrix_from_py(basis)), craig_generators(n));
        },
        py::arg("n"), py::arg("basis"));
  m.def("enumerate_p_sublattices",
        [](int n, long d, long p, int max_exp) {
          py::dict out;
          for (const auto& [e, v] : enumerate_p_sublattices(craig_lattice(n, d).basis, craig_generators(n), p, max_exp))
            out[py::int_(e)] = to_py(v);
          return out;
        },
        py::arg("n"), py::arg("d"), py::arg("p"), py::arg("max_exp"));
  m.def("enumerate_index_sublattices",
        [](int n, long d, long index) {
          return to_py(enumerate_index_sublattices(craig_lattice(n, d).basis, craig_generators(n), index));
        },
        py::arg("n"), py::arg("d"), py::arg("index"));
  m.def("classify_sublattice",
        [](const py::sequence& basis, int n, long p) {
          const auto c = classify_sublattice(LatticeBasis(matrix_from_py(basis)), n, p);
          return py::make_tuple(c.a, c.b);
        },
        py::arg("basis"), py::arg("n"), py::arg("p"));

  m.def("local_factor", [](int n, long p, int i) { return to_py(local_factor(n, p, i).numerator); }, py::arg("n"),
        py::arg("p"), py::arg("i"));
  m.def("series_expand",
        [](int n, long p, int i, int max_exp) { return to_py(series_expand(local_factor(n, p, i), max_exp)); },
        py::arg("n"), py::arg("p"), py::arg("i"), py::arg("max_exp"));
  m.def("global_zeta", [](int n, long d) { return to_py(global_zeta(n, d)); }, py::arg("n"), py::arg("d"));
  m.def("specht_zeta", [](int n) { return to_py(specht_zeta(n)); }, py::arg("n"));
  m.def("zeta_latex", [](int n, long d) { return zeta_to_latex(global_zeta(n, d)); }, py::arg("n"), py::arg("d"));
  m.def("dirichlet_coeff",
        [](int n, long d, std::uint64_t index) { return to_py(dirichlet_coeff(global_zeta(n, d), index)); },
        py::arg("n"), py::arg("d"), py::arg("m"));

  m.def("verify",
        [](int n_max, int max_exp, long coeff_limit, std::uint64_t seed) {
          VerifyOptions o;
          o.n_max = n_max;
          o.max_exp = max_exp;
          o.coeff_limit = coeff_limit;
          o.seed = seed;
          nlohmann::json report;
          {
            py::gil_scoped_release release;
            report = run_verification(o);
          }
          return json_to_py(report);
        },
        py::arg("n_max") = 3, py::arg("max_exp") = 6, py::arg("coeff_limit") = 20, py::arg("seed") = 1);
}
