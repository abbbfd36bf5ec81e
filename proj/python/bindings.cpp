#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "burch/burch.hpp"
#include "burch/monomial.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace burch;

namespace {

struct Ring {
  RingPtr ptr;
};

struct Algebra {
  AlgebraPtr ptr;
};

std::vector<std::string> gens(const Ideal& I) {
  std::vector<std::string> out;
  Ideal t = trim(I);
  for (const auto& g : t.generators()) out.push_back(g.to_string());
  return out;
}

py::object opt_poly(const std::optional<Polynomial>& p) { return p ? py::cast(p->to_string()) : py::none(); }
py::object opt_bool(const std::optional<bool>& b) { return b ? py::cast(*b) : py::none(); }

AlgebraModule module_of(const Algebra& A, const std::optional<Ideal>& J) {
  return J ? module_from_cyclic(A.ptr, *J) : residue_field(A.ptr);
}

py::dict report(const BurchReport& r) {
  py::dict d("burch"_a = r.burch, "depth_zero"_a = r.depth_zero, "witness"_a = opt_poly(r.witness));
  if (r.invariants) {
    const auto& i = *r.invariants;
    d["invariants"] = py::dict("length"_a = i.length, "edim"_a = i.edim, "type"_a = i.type, "mu"_a = i.mu,
                               "mu_mi"_a = i.mu_mi, "choi"_a = i.choi, "c_r"_a = i.c_r, "hilbert"_a = i.hilbert);
  } else {
    d["invariants"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_burch, m) {
  m.doc() = "Burch ideals and rings over prime fields";

  auto base = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  (void)base;

  py::class_<Ring>(m, "Ring")
      .def(py::init([](std::vector<std::string> vars, std::uint32_t p) { return Ring{RingContext::make(vars, p)}; }),
           "variables"_a, "modulus"_a = PrimeField::kDefaultModulus)
      .def_property_readonly("variables", [](const Ring& r) { return r.ptr->names(); })
      .def_property_readonly("modulus", [](const Ring& r) { return r.ptr->field().modulus(); })
      .def("ideal", [](const Ring& r, const std::string& s) { return Ideal::parse(r.ptr, s); }, "generators"_a)
      .def("maximal_ideal", [](const Ring& r) { return Ideal::maximal(r.ptr); });

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("ring", [](const Ideal& I) { return Ring{I.ring()}; })
      .def("generators", &gens)
      .def("contains", [](const Ideal& I, const std::string& f) { return I.contains(parse_polynomial(f, I.ring())); })
      .def("is_m_primary", [](const Ideal& I) { return is_m_primary(I); })
      .def("colon_maximal", [](const Ideal& I) { return ideal_colon(I, Ideal::maximal(I.ring())); })
      .def("__mul__", [](const Ideal& a, const Ideal& b) { return ideal_product(a, b); })
      .def("__add__", [](const Ideal& a, const Ideal& b) { return ideal_sum(a, b); })
      .def("__pow__", [](const Ideal& a, unsigned k) { return ideal_power(a, k); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return ideal_equal(a, b); })
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& I) { return "Ideal(" + I.to_string() + ")"; });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](const Ideal& I) { return Algebra{QuotientAlgebra::build(I)}; }), "ideal"_a)
      .def_property_readonly("ideal", [](const Algebra& A) { return A.ptr->ideal(); })
      .def_property_readonly("dim", [](const Algebra& A) { return A.ptr->dim(); })
      .def_property_readonly("edim", [](const Algebra& A) { return A.ptr->edim(); })
      .def_property_readonly("type", [](const Algebra& A) { return A.ptr->type(); })
      .def_property_readonly("hilbert", [](const Algebra& A) { return A.ptr->hilbert_function(); })
      .def_property_readonly("gorenstein", [](const Algebra& A) { return A.ptr->is_gorenstein(); })
      .def("socle", [](const Algebra& A) {
        std::vector<std::string> out;
        for (const auto& s : A.ptr->socle()) out.push_back(A.ptr->to_string(s));
        return out;
      });

  m.def("burch_ideal_test", [](const Ideal& I) { return report(burch_ideal_test(I)); }, "ideal"_a);
  m.def(
      "prop23_crosscheck",
      [](const Ideal& I) {
        Prop23Record p = prop23_crosscheck(I);
        return py::dict("definition"_a = opt_bool(p.definition), "colon"_a = opt_bool(p.colon),
                        "socle_product"_a = opt_bool(p.socle_product), "type_count"_a = opt_bool(p.type_count),
                        "notices"_a = p.notices, "agree"_a = p.agree());
      },
      "ideal"_a, "All equivalent Burch conditions that apply to the ideal");
  m.def("weakly_m_full", &weakly_m_full_test, "ideal"_a);
  m.def(
      "m_full",
      [](const Ideal& I, std::size_t trials, std::uint64_t seed) {
        MFullVerdict v = m_full_test(I, trials, seed);
        return py::dict("found"_a = v.found, "witness"_a = opt_poly(v.witness), "tested"_a = v.tested);
      },
      "ideal"_a, "trials"_a = 20, "seed"_a = 0);
  m.def("choi_invariant", &choi_invariant, "ideal"_a);
  m.def(
      "c_invariant", [](const Algebra& A) { return c_invariant(*A.ptr).value; }, "algebra"_a);
  m.def(
      "burch_ring",
      [](const Algebra& A) {
        RingVerdict v = burch_ring_depth_zero(*A.ptr);
        return py::dict("burch"_a = v.burch, "trivial"_a = v.trivial, "c"_a = v.c, "summand"_a = v.summand);
      },
      "algebra"_a, "Depth-zero Burch test, cross-checked against the second syzygy of k");
  m.def(
      "cube_zero_test",
      [](const Algebra& A) {
        CubeZeroVerdict v = cube_zero_test(*A.ptr);
        return py::dict("burch"_a = v.burch, "beta2"_a = v.beta2, "edim"_a = v.edim, "type"_a = v.type);
      },
      "algebra"_a);
  m.def(
      "lemma62_test",
      [](const Ideal& I) {
        Lemma62Verdict v = lemma62_test(I);
        return py::dict("burch"_a = v.burch, "mu"_a = v.mu, "mu_mi"_a = v.mu_mi);
      },
      "ideal"_a);
  m.def(
      "cut_down",
      [](const Ideal& I, const std::vector<std::string>& elems, bool allow_nonlinear) {
        std::vector<Polynomial> ps;
        for (const auto& e : elems) ps.push_back(parse_polynomial(e, I.ring()));
        CutResult r = cut_down(I, ps, allow_nonlinear);
        return py::make_tuple(r.ideal, r.eliminated);
      },
      "ideal"_a, "elements"_a, "allow_nonlinear"_a = false);
  m.def(
      "fibre_burch",
      [](const Algebra& S, const Algebra& T) {
        FibreVerdict v = fibre_burch(*S.ptr, *T.ptr);
        return py::dict("burch"_a = v.burch, "direct"_a = v.direct, "c_s"_a = v.c_s, "c_t"_a = v.c_t,
                        "n_term"_a = v.n_term);
      },
      "first"_a, "second"_a);
  m.def(
      "resolve",
      [](const Algebra& A, std::optional<Ideal> cyclic, std::size_t length) {
        Resolution res = minimal_resolution(module_of(A, cyclic), length);
        std::vector<std::string> diffs;
        std::vector<bool> summand;
        for (std::size_t i = 1; i <= res.length(); ++i) {
          diffs.push_back(res.differential_string(i));
          summand.push_back(k_summand_test(syzygy_of(res, i)).summand);
        }
        return py::dict("betti"_a = res.betti(), "differentials"_a = diffs, "k_summand"_a = summand);
      },
      "algebra"_a, "cyclic"_a = py::none(), "length"_a = 4,
      "Resolution of S/cyclic (or of k when cyclic is None) over the algebra");
  m.def(
      "tor",
      [](const Algebra& A, std::optional<Ideal> M, std::optional<Ideal> N, std::size_t upto) {
        return tor_sequence(minimal_resolution(module_of(A, M), upto + 1), module_of(A, N), upto);
      },
      "algebra"_a, "first"_a = py::none(), "second"_a = py::none(), "upto"_a = 3);
  m.def(
      "koszul_h1", [](const Algebra& A) { return koszul_h1(*A.ptr); }, "algebra"_a);
  m.def(
      "enumerate_mprimary",
      [](const Ring& r, unsigned d) {
        std::vector<Ideal> out;
        for (const auto& mi : enumerate_mprimary(r.ptr, d)) out.push_back(mi.to_ideal());
        return out;
      },
      "ring"_a, "max_socle_degree"_a, "Monomial m-primary ideals of k[x,y] containing m^(d+1)");
}
