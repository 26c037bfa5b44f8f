#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abg/abg_lie.hpp"
#include "abg/affine_weyl.hpp"
#include "abg/ce_homology.hpp"
#include "abg/char_ring.hpp"
#include "abg/check.hpp"
#include "abg/derivations.hpp"

namespace py = pybind11;
using namespace abg;

namespace {

py::int_ to_py(const Int& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::int_& x) { return Int(py::str(static_cast<py::handle>(x)).cast<std::string>()); }

std::vector<Int> ints(const std::vector<py::int_>& xs) {
  std::vector<Int> out;
  for (const auto& x : xs) out.push_back(from_py(x));
  return out;
}

py::list ints(const std::vector<Int>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::dict laurent_to_py(const SymLaurent& f) {
  py::dict d;
  for (const auto& [w, c] : f.terms()) d[py::make_tuple(w.first, w.second)] = to_py(c);
  return d;
}

SymLaurent laurent_from_py(const py::dict& d) {
  SymLaurent f;
  for (auto item : d) {
    auto w = item.first.cast<std::pair<int, int>>();
    f.add_term(w.first, w.second, from_py(item.second.cast<py::int_>()));
  }
  return f;
}

py::list isotypic_to_py(const std::vector<Isotypic>& parts) {
  py::list out;
  for (const auto& p : parts) out.append(py::make_tuple(p.m1, p.m2, to_py(p.mult)));
  return out;
}

/// A(D) together with its derivation data, kept alive as one object.
class Algebra {
 public:
  Algebra(unsigned D, std::uint64_t magma_cap) : A_(D, AlgebraOptions{magma_cap, std::nullopt}), der_(A_), g_(der_) {}

  unsigned generators() const { return A_.generators(); }
  std::size_t dim(unsigned n) const { return A_.dim(n); }
  std::size_t dim_b(unsigned n) const { return der_.dim_b(n); }
  std::size_t dim_inner(unsigned n) const { return der_.dim_inner(n); }
  std::size_t dim_abg(unsigned n) const { return g_.dim(n); }

  py::list verify(unsigned degree_bound, std::size_t trials, std::uint64_t seed) const {
    Rng rng(seed);
    std::vector<CheckResult> all;
    if (degree_bound >= 3) all = associator_checks(A_, degree_bound, trials, rng);
    for (auto& r : check_inner_derivation_identities(der_, degree_bound, trials, rng)) all.push_back(r);
    all.push_back(jacobi_check(g_, degree_bound, std::min(degree_bound, 3u), trials, rng));
    all.push_back(antisymmetry_check(g_, degree_bound, trials, rng));
    for (auto& r : sl3_action_checks(g_, degree_bound, trials, rng)) all.push_back(r);
    all.push_back(bm_roundtrip_check(g_, degree_bound, std::min(degree_bound, 4u), trials, rng));
    py::list out;
    for (const auto& r : all) {
      py::dict d;
      d["name"] = r.name;
      d["trials"] = r.trials;
      d["failures"] = r.failures;
      d["passed"] = r.passed();
      d["witness"] = r.witness;
      out.append(d);
    }
    return out;
  }

  py::dict homology(unsigned r_max, unsigned n_max, std::size_t cap) const {
    HomologyOptions opt;
    opt.r_max = r_max;
    opt.n_max = n_max;
    opt.cap = cap;
    auto rep = abg::homology(g_, opt);
    py::list degrees;
    for (const auto& d : rep.degrees) {
      py::dict e;
      e["r"] = d.r;
      e["N"] = d.N;
      e["complete"] = d.complete;
      e["dim"] = d.dim;
      e["weight_char"] = laurent_to_py(d.weight_char);
      e["isotypic"] = isotypic_to_py(d.isotypic);
      e["invariant"] = to_py(d.invariant);
      e["adjoint"] = to_py(d.adjoint);
      degrees.append(e);
    }
    py::dict out;
    out["degrees"] = degrees;
    out["skipped"] = rep.skipped.size();
    out["dd_zero"] = rep.dd_ok;
    out["euler_ok"] = rep.euler_ok;
    out["symmetric"] = rep.symmetric_ok;
    out["verified_range"] = rep.verified_range();
    out["matches_weyl_rows"] = compare_with_rows(rep, n_max).passed;
    return out;
  }

 private:
  FreeAlternativeAlgebra A_;
  Derivations der_;
  AbgAlgebra g_;
};

}  // namespace

PYBIND11_MODULE(_abgalt, m) {
  m.doc() = "Free alternative algebras, the ABG Lie algebra and sl3 character computations";

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<unsigned, std::uint64_t>(), py::arg("generators"), py::arg("magma_cap") = 200000)
      .def_property_readonly("generators", &Algebra::generators)
      .def("dim", &Algebra::dim, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("dim_b", &Algebra::dim_b, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("dim_inner", &Algebra::dim_inner, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("dim_abg", &Algebra::dim_abg, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("verify", &Algebra::verify, py::arg("degree_bound") = 4, py::arg("trials") = 100, py::arg("seed") = 42)
      .def("homology", &Algebra::homology, py::arg("r_max") = 3, py::arg("n_max") = 4, py::arg("cap") = 500000);

  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  m.def("ch_irr", [](int m1, int m2) { return laurent_to_py(ch_irr(m1, m2)); }, py::arg("m1"), py::arg("m2"));
  m.def("weyl_dimension", [](int m1, int m2) { return to_py(weyl_dimension(m1, m2)); });
  m.def("decompose", [](const py::dict& f) { return isotypic_to_py(decompose(laurent_from_py(f))); });
  m.def(
      "phi",
      [](const std::vector<py::int_>& a, const std::vector<py::int_>& b, unsigned order) {
        auto series = phi({ints(a), ints(b)}, order);
        py::list out;
        for (unsigned n = 0; n <= order; ++n) out.append(isotypic_to_py(decompose(series[n])));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("order"));
  m.def(
      "solve_conjecture",
      [](unsigned D, unsigned order) {
        auto s = solve_conjecture(D, order);
        return py::make_tuple(ints(s.a), ints(s.b));
      },
      py::arg("D"), py::arg("order"));
  m.def(
      "garland_lepowsky",
      [](unsigned max_length) {
        py::list out;
        for (const auto& r : garland_lepowsky(max_length))
          out.append(py::make_tuple(r.length, r.m1, r.m2, r.delta_degree, word_to_string(r.word)));
        return out;
      },
      py::arg("max_length"));
  m.def("check_distinct_mod_delta", [](unsigned max_length) { return check_distinct_mod_delta(max_length).passed; });
}
