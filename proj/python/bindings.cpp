#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mbraid/cli.hpp"
#include "mbraid/kitaev.hpp"
#include "mbraid/quaternion.hpp"
#include "mbraid/representations.hpp"
#include "mbraid/serialize.hpp"
#include "mbraid/verifiers.hpp"

namespace py = pybind11;
using namespace mbraid;

namespace {

py::dict terms_dict(const CliffordElement& x) {
  py::dict d;
  for (const auto& [b, c] : x.terms()) d[py::tuple(py::cast(b.indices()))] = c;
  return d;
}

CliffordElement element_from_terms(int n, const std::map<std::vector<int>, Complex>& terms) {
  CliffordElement x(n);
  for (const auto& [idx, c] : terms) x += CliffordElement::blade(n, Blade::from_indices(idx), c);
  return x;
}

}  // namespace

PYBIND11_MODULE(_mbraid, m) {
  m.doc() = "Braid-group representations from Majorana operators";
  m.attr("__version__") = kToolVersion;

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  // clifford-core
  py::class_<CliffordElement>(m, "CliffordElement")
      .def(py::init<int>(), py::arg("num_generators"))
      .def(py::init(&element_from_terms), py::arg("num_generators"), py::arg("terms"),
           "Build from {ascending index tuple: coefficient}.")
      .def_property_readonly("num_generators", &CliffordElement::num_generators)
      .def_property_readonly("terms", &terms_dict)
      .def("coefficient",
           [](const CliffordElement& x, const std::vector<int>& idx) {
             return x.coefficient(Blade::from_indices(idx));
           })
      .def("is_zero", &CliffordElement::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def("__mul__", [](const CliffordElement& x, Complex s) { return x * s; })
      .def("__rmul__", [](const CliffordElement& x, Complex s) { return s * x; })
      .def("__truediv__", [](const CliffordElement& x, Complex s) { return x / s; })
      .def("__repr__", &CliffordElement::to_string);
  m.def("generator", &generator, py::arg("n"), py::arg("k"));
  m.def("scalar", &CliffordElement::scalar, py::arg("n"), py::arg("value"));
  m.def("dagger", &dagger);
  m.def("distance", [](const CliffordElement& a, const CliffordElement& b) { return distance(a, b); });
  m.def("invert_binomial", py::overload_cast<const CliffordElement&>(&invert_binomial));
  m.def("conjugate_action", &conjugate_action, py::arg("s"), py::arg("s_inv"), py::arg("x"),
        py::arg("tol") = 1e-12);
  m.def("braid_element", &braid_element, py::arg("n"), py::arg("k"));
  m.def("fermion_from_majoranas", [](const CliffordElement& c1, const CliffordElement& c2) {
    auto f = fermion_from_majoranas(c1, c2);
    return py::make_tuple(f.psi, f.psi_dagger);
  });

  // linalg
  m.def("jordan_wigner", [](int n) { return jordan_wigner(n).matrices; }, py::arg("n"));
  m.def("realize", [](const CliffordElement& x, int n) { return realize(x, jordan_wigner(n)); },
        py::arg("x"), py::arg("n_majoranas"));

  // representations
  py::class_<UnitaryRep>(m, "UnitaryRep")
      .def_readonly("family", &UnitaryRep::family)
      .def_readonly("strands", &UnitaryRep::strands)
      .def_readonly("dim", &UnitaryRep::dim)
      .def_readonly("circular", &UnitaryRep::circular)
      .def_readonly("generators", &UnitaryRep::generators)
      .def("__len__", &UnitaryRep::size)
      .def("__repr__", [](const UnitaryRep& r) {
        std::ostringstream os;
        os << "<UnitaryRep " << r.family << " strands=" << r.strands << " dim=" << r.dim << ">";
        return os.str();
      });
  m.def("ivanov", &ivanov, py::arg("n"), py::arg("circular") = false);
  m.def("bell_basis_string", [](int n) {
    auto ms = bell_basis_string(n);
    return py::make_tuple(ms.A, ms.B);
  });
  m.def("extraspecial_rep", [](int n) { return extraspecial_rep(bell_basis_string(n)); }, py::arg("n"));
  m.def("temperley_lieb", [](int n) {
    auto tl = temperley_lieb(n);
    return py::make_tuple(tl.generators, tl.loop_value);
  });
  m.def("jones", [](int n, Complex A) { return jones_from_tl(temperley_lieb(n), A); }, py::arg("n"),
        py::arg("A") = jones_default_A());
  m.def("quaternion_triple", &quaternion_triple);
  m.def("fibonacci", &fibonacci);
  m.def("bell_B_II", &bell::B_II);

  // verifiers
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("check", &VerificationReport::check)
      .def_readonly("family", &VerificationReport::family)
      .def_readonly("params", &VerificationReport::params)
      .def_readonly("max_residual", &VerificationReport::max_residual)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_readonly("passed", &VerificationReport::pass)
      .def_readonly("metrics", &VerificationReport::metrics)
      .def_readonly("notes", &VerificationReport::notes)
      .def("__bool__", [](const VerificationReport& r) { return r.pass; })
      .def("to_json", [](const VerificationReport& r) { return dump(to_json(r)); });
  m.def("check_braid_relations",
        py::overload_cast<const UnitaryRep&, double>(&check_braid_relations), py::arg("rep"),
        py::arg("tol") = kMatrixTolerance);
  m.def("check_unitarity", &check_unitarity, py::arg("rep"), py::arg("tol") = kMatrixTolerance);
  m.def("check_generator_order", &check_generator_order, py::arg("rep"), py::arg("cap") = 16,
        py::arg("tol") = kMatrixTolerance);
  m.def("check_ybe", &check_ybe, py::arg("R"), py::arg("tol") = kMatrixTolerance);
  m.def("check_entangling", &check_entangling, py::arg("G"), py::arg("threshold") = 1e-6);
  m.def("product_state_determinant", &product_state_determinant);
  m.def("check_tl_relations", &check_tl_relations, py::arg("U"), py::arg("delta"),
        py::arg("tol") = kMatrixTolerance);
  m.def("check_majorana_string", [](int n, double tol) { return check_majorana_string(bell_basis_string(n), tol); },
        py::arg("n"), py::arg("tol") = kMatrixTolerance);
  m.def("solve_theta2", [](double t1, double t3) { return solve_theta2(t1, t3).theta2; });
  m.def("check_parameterized_ybe", &check_parameterized_ybe, py::arg("theta1"), py::arg("theta2"),
        py::arg("theta3"), py::arg("n") = 4, py::arg("k") = 0, py::arg("tol") = 1e-10);
  m.def("check_conjugation_rep", &check_conjugation_rep, py::arg("n"), py::arg("tol") = 1e-12);
  m.def("check_triple_conjugation", &check_triple_conjugation, py::arg("theta"), py::arg("tol") = 1e-12);

  // quaternion
  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<double, double, double, double>(), py::arg("a") = 0.0, py::arg("b") = 0.0,
           py::arg("c") = 0.0, py::arg("d") = 0.0)
      .def_readwrite("a", &Quaternion::a)
      .def_readwrite("b", &Quaternion::b)
      .def_readwrite("c", &Quaternion::c)
      .def_readwrite("d", &Quaternion::d)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self == py::self)
      .def("length", &Quaternion::length)
      .def("inverse", &q_inverse)
      .def("dagger", &q_dagger)
      .def("__repr__", [](const Quaternion& q) { return to_string(q); });
  m.def("to_su2", &to_su2);
  m.def("rotate", &rotate);
  m.def("rotate_formula", &rotate_formula);
  m.def("fibonacci_generators", [] {
    const auto f = fibonacci_generators();
    return py::make_tuple(f.g, f.h);
  });
  m.def("separated_traces", &separated_traces, py::arg("g"), py::arg("h"), py::arg("max_length"),
        py::arg("separation") = 1e-6);

  // kitaev-chain
  m.def("r_breve", &r_breve, py::arg("theta"), py::arg("k"), py::arg("n"));
  m.def("two_site_hamiltonian", &two_site_hamiltonian, py::arg("theta_dot"), py::arg("k"), py::arg("n"));
  m.def("schrodinger_residual",
        [](std::vector<double> times, std::vector<double> thetas, int k, int n) {
          return schrodinger_residual(ThetaSchedule(std::move(times), std::move(thetas)), k, n);
        },
        py::arg("times"), py::arg("thetas"), py::arg("k") = 0, py::arg("n") = 4);
  m.def("chain_hamiltonian",
        [](int N, double t1, double t2, const std::string& boundary) {
          return chain_hamiltonian({N, t1, t2, parse_boundary(boundary)});
        },
        py::arg("N"), py::arg("theta_dot_1"), py::arg("theta_dot_2"), py::arg("boundary") = "periodic");
  m.def("parity_operator", &parity_operator, py::arg("N"));
  m.def("excitation_gap", &excitation_gap);
  m.def("gap_scan",
        [](int N, const std::string& boundary, const std::vector<std::pair<double, double>>& grid,
           unsigned threads) {
          std::vector<double> gaps;
          for (const auto& r : gap_scan(N, parse_boundary(boundary), grid, threads)) gaps.push_back(r.gap);
          return gaps;
        },
        py::arg("N"), py::arg("boundary"), py::arg("grid"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

  // cli-reports
  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "mbraid");
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
