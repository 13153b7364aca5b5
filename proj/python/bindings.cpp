#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "smcg/cli.hpp"
#include "smcg/cocycle.hpp"
#include "smcg/jacobi.hpp"
#include "smcg/mcg.hpp"
#include "smcg/quadratic.hpp"
#include "smcg/symplectic.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through decimal text; exact at any size.
namespace pybind11::detail {
template <> struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool convert) {
    if (!src) return false;
    if (!PyLong_Check(src.ptr())) {
      if (!convert || !PyIndex_Check(src.ptr())) return false;
    }
    object as_int = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!as_int) {
      PyErr_Clear();
      return false;
    }
    value.set_str(str(as_int).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class &v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str(10).c_str(), nullptr, 10);
  }
};
} // namespace pybind11::detail

namespace {

std::vector<smcg::Integer> to_vec(std::span<const smcg::Integer> s) { return {s.begin(), s.end()}; }

std::vector<std::vector<smcg::Integer>> rows_of(const smcg::IntMatrix &m) {
  std::vector<std::vector<smcg::Integer>> out(m.rows(), std::vector<smcg::Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

smcg::SymplecticMatrix matrix_from_rows(const std::vector<std::vector<smcg::Integer>> &rows) {
  return smcg::SymplecticMatrix(smcg::IntMatrix::from_rows(rows));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  using namespace smcg;
  m.doc() = "Exact algebraic models of mapping class groups of #_r S^p x S^p (p = 3, 7).";

  py::register_exception<Error>(m, "SmcgError", PyExc_ValueError);

  py::class_<Covector>(m, "Covector")
      .def(py::init([](std::vector<Integer> coords, std::uint64_t modulus) {
             return Covector(std::move(coords), Modulus(modulus));
           }),
           py::arg("coords"), py::arg("modulus") = 0)
      .def_property_readonly("coords", [](const Covector &x) { return to_vec(x.coords()); })
      .def_property_readonly("modulus", [](const Covector &x) { return x.modulus().value(); })
      .def_property_readonly("rank", [](const Covector &x) { return x.rank().value(); })
      .def("act", [](const Covector &x, const SymplecticMatrix &a) { return act(x, a); })
      .def("reduce", [](const Covector &x, std::uint64_t target) { return reduce(x, Modulus(target)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Covector &x) {
        std::ostringstream os;
        os << "Covector([";
        for (std::size_t k = 0; k < x.dim(); ++k) os << (k ? ", " : "") << x[k].get_str();
        os << "], modulus=" << x.modulus().value() << ")";
        return os.str();
      });

  py::class_<SymplecticMatrix>(m, "SymplecticMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_static("identity", [](int r) { return SymplecticMatrix::identity(Rank(r)); })
      .def_property_readonly("rows", [](const SymplecticMatrix &a) { return rows_of(a.entries()); })
      .def_property_readonly("rank", [](const SymplecticMatrix &a) { return a.rank().value(); })
      .def("inverse", &SymplecticMatrix::inverse)
      .def("__mul__", [](const SymplecticMatrix &a, const SymplecticMatrix &b) { return a * b; })
      .def(py::self == py::self);

  m.def("phi", [](std::vector<Integer> v, std::vector<Integer> w) { return phi(Vector(std::move(v)), Vector(std::move(w))); });
  m.def("transvection", [](std::vector<Integer> v) { return transvection(Vector(std::move(v))); });
  m.def("is_symplectic", [](const std::vector<std::vector<Integer>> &rows) { return is_symplectic(IntMatrix::from_rows(rows)); });
  m.def("neg_identity", [](int r) { return neg_identity(Rank(r)); });
  m.def("random_symplectic", [](int r, std::size_t length, std::uint64_t seed) { return random_symplectic(Rank(r), length, seed); },
        py::arg("r"), py::arg("word_length"), py::arg("seed"));

  py::class_<QuadraticRefinement>(m, "QuadraticRefinement")
      .def(py::init([](const std::string &bits) { return QuadraticRefinement::parse(bits); }), py::arg("bits"))
      .def_static("zero", [](int r) { return QuadraticRefinement::zero(Rank(r)); })
      .def_property_readonly("rank", [](const QuadraticRefinement &q) { return q.rank().value(); })
      .def_property_readonly("bits", &QuadraticRefinement::to_string)
      .def("__call__",
           [](const QuadraticRefinement &q, std::uint64_t v) { return qeval(q, BitVector(q.rank(), v)); })
      .def("act", [](const QuadraticRefinement &q, const SymplecticMatrix &a) { return qact(q, a); })
      .def("translate", [](const QuadraticRefinement &q, std::uint64_t x) { return qtranslate(q, BitCovector(q.rank(), x)); })
      .def("difference", [](const QuadraticRefinement &a, const QuadraticRefinement &b) { return qdifference(a, b).bits(); })
      .def("arf", [](const QuadraticRefinement &q) { return static_cast<int>(arf(q)); })
      .def(py::self == py::self)
      .def("__repr__", [](const QuadraticRefinement &q) { return "QuadraticRefinement('" + q.to_string() + "')"; });

  m.def("enumerate_refinements", [](int r) { return enumerate_refinements(Rank(r)); });
  m.def("orbit_of", &orbit_of);
  m.def("orbit_decomposition", [](int r) {
    py::list out;
    for (const auto &o : orbit_decomposition(Rank(r)).orbits) {
      py::dict d;
      d["arf"] = static_cast<int>(o.arf);
      d["size"] = o.size;
      d["representative"] = o.representative.to_string();
      d["arf_constant"] = o.arf_constant;
      out.append(d);
    }
    return out;
  });

  m.def("coboundary_at", &coboundary_at);
  m.def("principal_at", [](const QuadraticRefinement &q, const SymplecticMatrix &a) { return principal_at(q, a).bits(); });
  m.def("principal_coboundary_witness", [](const QuadraticRefinement &q) -> std::optional<std::uint64_t> {
    auto w = principal_coboundary_witness(q);
    if (!w) return std::nullopt;
    return w->shift.bits();
  });

  py::class_<JacobiElement>(m, "JacobiElement")
      .def(py::init<Covector, SymplecticMatrix>(), py::arg("x"), py::arg("A"))
      .def_static("identity", [](int r, std::uint64_t mod) { return JacobiElement::identity(Rank(r), Modulus(mod)); })
      .def_property_readonly("x", &JacobiElement::x)
      .def_property_readonly("A", &JacobiElement::matrix)
      .def("__mul__", &jmul)
      .def("inverse", &jinv)
      .def(py::self == py::self)
      .def("to_json", &cli::emit_element)
      .def_static("from_json", &cli::parse_element);

  m.def("jmul", &jmul);
  m.def("jinv", &jinv);
  m.def("gamma_psi_member", &gamma_psi_member);
  m.def("include_fiber", &include_fiber);
  m.def("project", &project);
  m.def("reduce_modulus", [](const JacobiElement &g, std::uint64_t target) { return reduce_modulus(g, Modulus(target)); });
  m.def("reframe", &reframe);
  m.def("section_r1", [](const SymplecticMatrix &a, std::uint64_t mod) { return section_r1(a, Modulus(mod)); });
  m.def("splits", [](int r, std::uint64_t mod) {
    const auto v = splits(Rank(r), Modulus(mod));
    py::dict d;
    d["splits"] = v.splits;
    d["base"] = v.base.to_string();
    d["refinements_checked"] = v.candidates_checked;
    d["fixed_refinements"] = v.fixed_found;
    d["section_lift"] = v.section_lift ? py::cast(to_vec(v.section_lift->coords())) : py::none();
    return d;
  });

  m.def("pontryagin_coefficient", &pontryagin_coefficient);
  m.def("splitting_theorem_verdict", [](int p, int r) {
    const auto v = splitting_theorem_verdict(p, Rank(r));
    return py::make_tuple(v.smooth, v.homotopy);
  });
  m.def("dehn_twist", [](int p, int r, std::size_t i, const std::string &kind, const Integer &alpha, bool homotopy) {
    const auto model = homotopy ? homotopy_model(p, Rank(r)) : aut_model(p, Rank(r));
    if (kind != "u" && kind != "v") throw InvalidArgument("kind must be 'u' or 'v'");
    return dehn_twist(model, i, kind == "u" ? TwistKind::U : TwistKind::V, alpha);
  }, py::arg("p"), py::arg("r"), py::arg("i"), py::arg("kind"), py::arg("alpha"), py::arg("homotopy") = false);

  m.def("run_cli", [](const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  m.attr("__version__") = cli::kVersion;
}
