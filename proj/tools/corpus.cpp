#include <algorithm>
#include <functional>

#include "burch/burch.hpp"
#include "burch/errors.hpp"
#include "commands.hpp"

namespace burch::cli {

namespace {

struct Check {
  std::string description;
  Json expected, actual;
};

using Entry = std::function<std::vector<Check>(std::uint32_t)>;

struct Ctx {
  std::uint32_t p;
  RingPtr ring(std::vector<std::string> vars) const { return RingContext::make(std::move(vars), p); }
  Ideal ideal(std::vector<std::string> vars, const char* gens) const { return Ideal::parse(ring(std::move(vars)), gens); }
  AlgebraPtr algebra(std::vector<std::string> vars, const char* gens) const {
    return QuotientAlgebra::build(ideal(std::move(vars), gens));
  }
};

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Check> entry_r3(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  out.push_back({"(x^3) in k[x] is Burch", true, burch_ideal_test(c.ideal({"x"}, "x^3")).burch});
  Ideal sq = c.ideal({"x", "y"}, "x^2, x*y, y^2");
  Prop23Record r = prop23_crosscheck(sq);
  out.push_back({"m^2 in k[x,y]: all equivalent conditions hold", Json::array({true, true, true, true}),
                 Json::array({*r.definition, *r.colon, *r.socle_product, *r.type_count})});
  out.push_back({"m^2 in k[x,y] is weakly m-full", true, weakly_m_full_test(sq)});
  MFullVerdict mf = m_full_test(sq);
  out.push_back({"m^2 in k[x,y] is m-full with witness x", "x", mf.witness ? mf.witness->to_string() : ""});
  out.push_back({"Choi invariant of m^2 in k[x,y]", 3, choi_invariant(sq)});
  return out;
}

std::vector<Check> entry_r8(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  AlgebraPtr R = c.algebra({"x", "y"}, "x^4, x^2*y^2, y^4");
  Resolution res = minimal_resolution(residue_field(R), 3);
  out.push_back({"Betti numbers of k", Json::array({1, 2, 4, 8}), res.betti()});
  std::vector<std::string> soc;
  for (const auto& s : R->socle()) soc.push_back(R->to_string(s));
  out.push_back({"socle basis", sorted({"x^3*y", "x*y^3"}), sorted(soc)});
  out.push_back({"k is a summand of the second syzygy of k", false, k_summand_test(syzygy_of(res, 2)).summand});
  SyzygyModule Z3 = syzygy_of(res, 3);
  out.push_back({"k is a summand of the third syzygy of k", true, k_summand_test(Z3).summand});
  Vector z(4 * R->dim(), 0);
  AlgebraElement s = R->parse("x^3*y");
  std::copy(s.begin(), s.end(), z.begin());
  out.push_back({"(x^3*y, 0, 0, 0) is a socle element of the third syzygy outside m times it", true,
                 k_summand_witness(Z3, z)});
  out.push_back({"ideal is not Burch", false, burch_ideal_test(R->ideal()).burch});
  out.push_back({"c invariant", 0, c_invariant(*R).value});
  return out;
}

std::vector<Check> entry_e44(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  Ideal I = c.ideal({"x", "y", "z"}, "x^2*z^2 - y^2, x^4 - y*z^2, x^2*y - z^4");
  const RingPtr& S = I.ring();
  CutResult byx = cut_down(I, {Polynomial::variable(S, 0)});
  out.push_back({"cut by x equals (y^2, y*z^2, z^4)", true,
                 ideal_equal(byx.ideal, c.ideal({"y", "z"}, "y^2, y*z^2, z^4"))});
  out.push_back({"cut by x is Burch", true, burch_ideal_test(byx.ideal).burch});
  CutResult byy = cut_down(I, {Polynomial::variable(S, 1)});
  out.push_back({"cut by y equals (x^4, x^2*z^2, z^4)", true,
                 ideal_equal(byy.ideal, c.ideal({"x", "z"}, "x^4, x^2*z^2, z^4"))});
  out.push_back({"cut by y is not Burch", false, burch_ideal_test(byy.ideal).burch});
  return out;
}

std::vector<Check> entry_r2(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  AlgebraPtr R = c.algebra({"x", "y"}, "x^2, x*y, y^2");
  RingVerdict v = burch_ring_depth_zero(*R);
  out.push_back({"k[x,y]/(x^2,xy,y^2) is a Burch ring", true, v.burch});
  out.push_back({"its c invariant", 3, v.c});
  FibreVerdict f = fibre_burch(*c.algebra({"x"}, "x^2"), *c.algebra({"y"}, "y^3"));
  out.push_back({"k[x]/(x^2) x_k k[y]/(y^3) is Burch", true, f.burch});
  out.push_back({"direct test on the fibre product", true, f.direct});
  return out;
}

std::vector<Check> entry_t63(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  Ideal I = c.ideal({"x", "y", "z"}, "x^4, y^4, z^4, x^2*y, y^2*z, z^2*x");
  Ideal m = Ideal::maximal(I.ring());
  Ideal col = ideal_colon(I, m);
  Ideal listed = Ideal::parse(I.ring(), "x^4, x^3*z, x^2*y, x*y^3, x*y*z, x*z^2, y^4, y^2*z, y*z^3, z^4");
  out.push_back({"(I:m) equals the ten listed generators", true, ideal_equal(col, listed)});
  out.push_back({"(I:m) needs ten generators", 10, minimal_generator_count(col)});
  out.push_back({"(I:m)^2 = I(I:m)", false, ideal_equal(ideal_power(col, 2), ideal_product(I, col))});
  out.push_back({"I is not Burch", false, burch_ideal_test(I).burch});

  Ideal J = c.ideal({"x", "y"}, "x^4, y^4, x^3*y, x*y^3");
  Ideal jm = Ideal::maximal(J.ring());
  Ideal jcol = ideal_colon(J, jm);
  out.push_back({"(J:m) = (x^3, x^2*y^2, y^3)", true, ideal_equal(jcol, Ideal::parse(J.ring(), "x^3, x^2*y^2, y^3"))});
  // x^6 lies in (J:m)^2 while I(J:m) starts in degree 7, so the two differ.
  out.push_back({"(J:m)^2 = J(J:m)", false, ideal_equal(ideal_power(jcol, 2), ideal_product(J, jcol))});
  out.push_back({"J is Burch", true, burch_ideal_test(J).burch});
  return out;
}

std::vector<Check> entry_tt(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  AlgebraPtr R = c.algebra({"x", "y", "t"}, "x^2, x*y, y^2, t^2");
  AlgebraElement t = R->variable(2);
  out.push_back({"(t, t) is an exact pair", true, is_exact_pair(*R, t, t)});
  bool found = false;
  for (const auto& e : find_exact_pairs(*R))
    if (e.a == t && e.b == t) found = true;
  out.push_back({"the exact pair search finds (t, t)", true, found});
  out.push_back({"the ring is not Burch", false, burch_ring_depth_zero(*R).burch});
  return out;
}

std::vector<Check> entry_r9(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  for (int r = 1; r <= 5; ++r) {
    std::string gens = "x^" + std::to_string(r) + ", y";
    GorensteinBurch g = gorenstein_burch_classifier(c.ideal({"x", "y"}, gens.c_str()));
    out.push_back({"(" + gens + ") is Gorenstein and Burch of length " + std::to_string(r),
                   Json::array({true, true, r}), Json::array({g.gorenstein, g.burch, g.length})});
    out.push_back({"(" + gens + ") has edim at most 1", true, g.edim <= 1});
  }
  GorensteinBurch ci = gorenstein_burch_classifier(c.ideal({"x", "y"}, "x^2, y^2"));
  out.push_back({"(x^2, y^2) is Gorenstein and not Burch", Json::array({true, false}),
                 Json::array({ci.gorenstein, ci.burch})});
  return out;
}

std::vector<Check> entry_r4(std::uint32_t p) {
  Ctx c{p};
  std::vector<Check> out;
  struct Case {
    std::vector<std::string> vars;
    const char* ideal;
    const char* element;
  };
  const std::vector<Case> cases = {
      {{"x", "y"}, "y^2 - x^3", "x^2"},
      {{"x", "y"}, "y^2 - x^3", "y^2"},
      {{"x", "y"}, "x*y", "x^2 + y^2"},
      {{"x", "y", "z"}, "x^2*z^2 - y^2, x^4 - y*z^2, x^2*y - z^4", "x^2"},
  };
  for (const auto& cs : cases) {
    Ideal I = c.ideal(cs.vars, cs.ideal);
    CutResult r = cut_down(I, {parse_polynomial(cs.element, I.ring())}, true);
    out.push_back({"(" + std::string(cs.ideal) + ") cut by " + cs.element + " is not Burch", false,
                   burch_ideal_test(r.ideal).burch});
  }
  CutResult lin = cut_down(c.ideal({"x", "y"}, "y^2 - x^3"), {Polynomial::variable(c.ring({"x", "y"}), 0)});
  out.push_back({"(y^2 - x^3) cut by x is (y^2) and Burch", Json::array({true, true}),
                 Json::array({ideal_equal(lin.ideal, c.ideal({"y"}, "y^2")), burch_ideal_test(lin.ideal).burch})});
  return out;
}

const std::vector<std::pair<std::string, Entry>>& entries() {
  static const std::vector<std::pair<std::string, Entry>> all = {
      {"r3", entry_r3}, {"r8", entry_r8}, {"e44", entry_e44}, {"r2", entry_r2},
      {"t63", entry_t63}, {"tt", entry_tt}, {"r9", entry_r9}, {"r4", entry_r4},
  };
  return all;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.first);
  return out;
}

Outcome corpus(const std::optional<std::string>& only, const Options& opt) {
  if (only) {
    auto names = corpus_names();
    if (std::find(names.begin(), names.end(), *only) == names.end())
      throw UsageError("unknown corpus entry '" + *only + "'");
  }
  const std::uint32_t p = opt.modulus ? *opt.modulus : PrimeField::kDefaultModulus;
  Outcome out;
  Json list = Json::array();
  std::size_t passed = 0, failed = 0;
  for (const auto& [name, run] : entries()) {
    if (only && *only != name) continue;
    Json checks = Json::array();
    bool ok = true;
    try {
      for (const auto& c : run(p)) {
        bool pass = c.expected == c.actual;
        ok = ok && pass;
        checks.push_back(Json{{"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", pass}});
      }
    } catch (const std::exception& e) {
      ok = false;
      checks.push_back(Json{{"description", "error"}, {"expected", nullptr}, {"actual", e.what()}, {"pass", false}});
    }
    (ok ? passed : failed)++;
    list.push_back(Json{{"name", name}, {"pass", ok}, {"checks", checks}});
  }
  out.result["modulus"] = p;
  out.result["entries"] = list;
  out.result["passed"] = passed;
  out.result["failed"] = failed;
  out.exit_code = failed ? 1 : 0;
  return out;
}

}  // namespace burch::cli
