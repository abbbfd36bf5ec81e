#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "burch/burch.hpp"
#include "burch/errors.hpp"
#include "burch/monomial.hpp"

namespace burch::cli {

namespace {

AlgebraPtr algebra(const Ideal& I) { return QuotientAlgebra::build(I); }

Json optional_string(const std::optional<Polynomial>& p) { return p ? Json(p->to_string()) : Json(nullptr); }
Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json vector_json(const QuotientAlgebra& R, std::size_t rank, const std::optional<Vector>& v) {
  if (!v) return nullptr;
  return FreeVectorOps{R, rank}.to_string(*v);
}

std::vector<std::string> element_strings(const QuotientAlgebra& R, const std::vector<AlgebraElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(R.to_string(x));
  return out;
}

Json c_json(const CInvariant& c) {
  return Json{{"value", c.value},       {"degenerate", c.degenerate}, {"socle", c.socle},
              {"h1", c.h1},             {"edim", c.edim},             {"h1_reduced", c.h1_reduced},
              {"edim_reduced", c.edim_reduced}};
}

Json invariants_json(const IdealInvariants& inv) {
  return Json{{"length", inv.length}, {"edim", inv.edim}, {"type", inv.type},   {"mu", inv.mu},
              {"mu_mi", inv.mu_mi},   {"choi", inv.choi}, {"c_r", inv.c_r},     {"hilbert", inv.hilbert}};
}

}  // namespace

std::vector<std::string> generator_strings(const Ideal& I) {
  std::vector<std::string> out;
  Ideal t = trim(I);
  for (const auto& g : t.generators()) out.push_back(g.to_string());
  return out;
}

Json check(const Session& s, const std::string& ideal, const std::string& route) {
  if (route != "definition" && route != "all") throw UsageError("unknown route '" + route + "' (definition, all)");
  const std::string& name = s.ideal_name(ideal);
  const Ideal& I = s.ideal(name);
  BurchReport r = burch_ideal_test(I);
  Json j;
  j["ideal"] = name;
  j["generators"] = generator_strings(I);
  j["burch"] = r.burch;
  j["depth_zero"] = r.depth_zero;
  j["route"] = route;
  j["witness"] = optional_string(r.witness);
  j["invariants"] = r.invariants ? invariants_json(*r.invariants) : Json(nullptr);
  if (route == "all") {
    Prop23Record p = prop23_crosscheck(I);
    j["routes"] = Json{{"definition", optional_bool(p.definition)},
                       {"colon", optional_bool(p.colon)},
                       {"socle_product", optional_bool(p.socle_product)},
                       {"type_count", optional_bool(p.type_count)}};
    j["notices"] = p.notices;
    if (!p.agree()) throw ConsistencyError("equivalent Burch conditions disagree for " + I.to_string());
  }
  return j;
}

Json invariants(const Session& s, const std::string& ideal) {
  const std::string& name = s.ideal_name(ideal);
  const Ideal& I = s.ideal(name);
  BurchReport r = burch_ideal_test(I);
  Json j;
  j["ideal"] = name;
  j["generators"] = generator_strings(I);
  j["burch"] = r.burch;
  j["depth_zero"] = r.depth_zero;
  j["weakly_m_full"] = weakly_m_full_test(I);
  j["m_primary"] = is_m_primary(I);
  if (is_m_primary(I) || I.is_homogeneous())
    j["choi"] = choi_invariant(I);
  else
    j["choi"] = nullptr;
  if (!is_m_primary(I)) {
    j["notices"] = {"ideal is not m-primary; quotient invariants skipped"};
    return j;
  }
  AlgebraPtr A = algebra(I);
  const IdealInvariants& inv = *r.invariants;
  j["length"] = inv.length;
  j["edim"] = inv.edim;
  j["type"] = inv.type;
  j["gorenstein"] = A->is_gorenstein();
  j["hilbert"] = inv.hilbert;
  j["loewy_length"] = A->loewy_length();
  j["socle"] = element_strings(*A, A->socle());
  j["mu"] = inv.mu;
  j["mu_mi"] = inv.mu_mi;
  j["c_r"] = c_json(c_invariant(*A));
  if (A->maximal_power(3).empty()) {
    CubeZeroVerdict cz = cube_zero_test(*A);
    j["cube_zero"] = Json{{"beta2", cz.beta2}, {"burch", cz.burch}};
  } else {
    j["cube_zero"] = nullptr;
  }
  if (I.ring()->nvars() == 2) {
    Lemma62Verdict l = lemma62_test(I);
    j["generator_count_test"] = Json{{"mu", l.mu}, {"mu_mi", l.mu_mi}, {"burch", l.burch}};
  }
  return j;
}

Json resolve(const Session& s, const std::string& ideal, const std::string& module, std::size_t length) {
  const std::string& name = s.ideal_name(ideal);
  AlgebraPtr A = algebra(s.ideal(name));
  AlgebraModule M = s.module(A, module);
  Resolution res = minimal_resolution(M, length);
  Json j;
  j["ideal"] = name;
  j["module"] = module;
  j["betti"] = res.betti();
  Json diffs = Json::array(), entries = Json::array(), summands = Json::array();
  for (std::size_t i = 1; i <= res.length(); ++i) {
    diffs.push_back(res.differential_string(i));
    entries.push_back(element_strings(*A, res.entry_ideal(i).minimal_generators));
    SummandVerdict v = k_summand_test(syzygy_of(res, i));
    summands.push_back(Json{{"index", i}, {"summand", v.summand}, {"witness", vector_json(*A, res.betti()[i - 1], v.witness)}});
  }
  j["differentials"] = diffs;
  j["entry_ideals"] = entries;
  j["k_summand"] = summands;
  return j;
}

Json syzygy_summand(const Session& s, const std::string& ideal, const std::string& module, std::size_t index) {
  if (index == 0) throw UsageError("syzygy index must be at least 1");
  const std::string& name = s.ideal_name(ideal);
  AlgebraPtr A = algebra(s.ideal(name));
  SyzygyModule Z = syzygy(s.module(A, module), index);
  SummandVerdict v = k_summand_test(Z);
  return Json{{"ideal", name},
              {"module", module},
              {"index", index},
              {"ambient_rank", Z.ambient_rank},
              {"generators", Z.generators.size()},
              {"summand", v.summand},
              {"witness", vector_json(*A, Z.ambient_rank, v.witness)}};
}

Json tor(const Session& s, const std::string& ideal, const std::string& m, const std::string& n, std::size_t upto) {
  const std::string& name = s.ideal_name(ideal);
  AlgebraPtr A = algebra(s.ideal(name));
  AlgebraModule M = s.module(A, m), N = s.module(A, n);
  return Json{{"ideal", name},
              {"modules", {m, n}},
              {"tor", tor_sequence(minimal_resolution(M, upto + 1), N, upto)}};
}

Json mfull(const Session& s, const std::string& ideal, std::size_t trials, std::uint64_t seed) {
  const std::string& name = s.ideal_name(ideal);
  const Ideal& I = s.ideal(name);
  MFullVerdict v = m_full_test(I, trials, seed);
  return Json{{"ideal", name},
              {"m_full", v.found},
              {"certainty", v.found ? "certified" : "probabilistic"},
              {"witness", optional_string(v.witness)},
              {"tested", v.tested},
              {"weakly_m_full", weakly_m_full_test(I)}};
}

Json cut(const Session& s, const std::string& ideal, const std::string& by, bool allow_nonlinear) {
  const std::string& name = s.ideal_name(ideal);
  std::vector<Polynomial> elems = parse_polynomial_list(by, s.ring);
  if (elems.empty()) throw UsageError("nothing to cut by");
  CutResult r = cut_down(s.ideal(name), elems, allow_nonlinear);
  BurchReport b = burch_ideal_test(r.ideal);
  std::vector<std::string> by_strings;
  for (const auto& e : elems) by_strings.push_back(e.to_string());
  return Json{{"ideal", name},
              {"sequence", by_strings},
              {"regular", true},
              {"eliminated", r.eliminated},
              {"variables", r.ideal.ring()->names()},
              {"generators", generator_strings(r.ideal)},
              {"burch", b.burch},
              {"scope", "per-sequence"}};
}

Json fibre(const Session& s, const std::string& ideal_s, const Session& t, const std::string& ideal_t) {
  AlgebraPtr A = algebra(s.ideal(ideal_s)), B = algebra(t.ideal(ideal_t));
  FibreVerdict v = fibre_burch(*A, *B);
  FibreProduct fp = fibre_product(*A, *B);
  return Json{{"c_s", v.c_s},
              {"c_t", v.c_t},
              {"n_term", v.n_term},
              {"burch", v.burch},
              {"direct", v.direct},
              {"variables", fp.ideal.ring()->names()},
              {"generators", generator_strings(fp.ideal)}};
}

namespace {

struct SweepRow {
  Json verdicts;
  std::vector<std::string> failures;
};

SweepRow sweep_one(const MonomialIdeal& mi, const std::set<std::string>& checks, std::size_t index, const Options& opt) {
  SweepRow row;
  Ideal I = mi.to_ideal();
  auto fail = [&](const std::string& what) { row.failures.push_back(what); };
  try {
    const bool ref = burch_ideal_test(I).burch;
    row.verdicts["burch"] = ref;
    AlgebraPtr A = algebra(I);
    const bool field = A->is_field();
    if (checks.count("prop23")) {
      Prop23Record p = prop23_crosscheck(I);
      Json routes = Json::array();
      for (const auto& v : {p.colon, p.socle_product, p.type_count}) {
        routes.push_back(optional_bool(v));
        if (!v || *v != ref) fail("prop23");
      }
      row.verdicts["prop23"] = routes;
    }
    auto compare = [&](const char* key, bool v) {
      row.verdicts[key] = v;
      if (v != ref) fail(key);
    };
    if (checks.count("monomial")) compare("monomial", burch_monomial(mi).burch);
    if (checks.count("twovar")) compare("twovar", burch_twovar(mi));
    if (checks.count("lemma62")) compare("lemma62", lemma62_test(I).burch);
    std::optional<CInvariant> c;
    if (checks.count("c_r") || checks.count("choi")) c = c_invariant(*A);
    if (checks.count("c_r")) compare("c_r", c->value > 0);
    // Over a field the second syzygy of k is zero and the Choi invariant counts n/n^2;
    // both sides of these identities only apply to non-fields.
    if (checks.count("summand") && !field)
      compare("summand", k_summand_test(syzygy(residue_field(A), 2)).summand);
    if (checks.count("choi") && !field) {
      std::size_t ch = choi_invariant(I);
      row.verdicts["choi"] = ch;
      if (ch != c->value) fail("choi");
      std::size_t e = A->edim(), h1 = koszul_h1(*A);
      std::size_t b2 = minimal_resolution(residue_field(A), 2).betti()[2];
      if (h1 + e * (e - 1) / 2 != b2) fail("koszul");
    }
    if (checks.count("mfull")) {
      bool weak = weakly_m_full_test(I);
      bool full = m_full_test(I, 3, opt.seed + index).found;
      row.verdicts["weakly_m_full"] = weak;
      row.verdicts["m_full"] = full;
      if (weak && !ref) fail("mfull");
      if (full && !weak) fail("mfull");
    }
    if (checks.count("cube") && A->maximal_power(3).empty()) compare("cube", cube_zero_test(*A).burch);
    if (checks.count("gorenstein")) {
      GorensteinBurch g = gorenstein_burch_classifier(I);
      row.verdicts["gorenstein"] = g.gorenstein;
      if (!g.consistent) fail("gorenstein");
    }
    if (checks.count("minmulti")) {
      Ideal m = Ideal::maximal(I.ring());
      if (I.contains(ideal_power(m, 2)) && !ideal_equal(I, m) && !ref) fail("minmulti");
    }
    // Resolutions over quotients with four or more relations grow too fast to scan to
    // length max_length + 2, so the Tor scan is limited to three-generated ideals.
    if (checks.count("tor") && ref && !field && opt.max_length >= 3 && minimal_generator_count(I) > 3) {
      row.verdicts["tor"] = "skipped";
    } else if (checks.count("tor") && ref && !field && opt.max_length >= 3) {
      std::mt19937_64 rng(opt.seed * 1000003 + index);
      auto mods = sample_modules(A, 2, rng);
      if (mods.size() == 2) {
        const std::size_t L = opt.max_length;
        auto seq = tor_sequence(minimal_resolution(mods[0], L + 2), mods[1], L + 1);
        row.verdicts["tor"] = seq;
        for (std::size_t l = 3; l <= L; ++l)
          if (seq[l] == 0 && seq[l + 1] == 0) fail("tor");
      }
    }
  } catch (const std::exception& e) {
    fail(std::string("error: ") + e.what());
  }
  return row;
}

}  // namespace

Outcome sweep(unsigned max_degree, const std::vector<std::string>& checks, const Options& opt) {
  std::set<std::string> chosen;
  for (const auto& c : checks) {
    if (c == "all") {
      chosen.insert(kSweepChecks.begin(), kSweepChecks.end());
    } else if (std::find(kSweepChecks.begin(), kSweepChecks.end(), c) == kSweepChecks.end()) {
      throw UsageError("unknown check '" + c + "'");
    } else {
      chosen.insert(c);
    }
  }
  if (chosen.empty()) chosen.insert(kSweepChecks.begin(), kSweepChecks.end());
  if (max_degree > kMaxEnumerationDegree)
    throw PreconditionError("sweep degree bound is at most " + std::to_string(kMaxEnumerationDegree));
  auto ring = opt.modulus ? RingContext::make({"x", "y"}, *opt.modulus) : RingContext::make({"x", "y"});
  std::vector<MonomialIdeal> ideals = enumerate_mprimary(ring, max_degree);
  std::vector<SweepRow> rows(ideals.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ideals.size();) rows[i] = sweep_one(ideals[i], chosen, i, opt);
  };
  std::size_t n_threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Outcome out;
  Json bad = Json::array();
  std::size_t burch_count = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].verdicts.contains("burch") && rows[i].verdicts["burch"].get<bool>()) ++burch_count;
    if (rows[i].failures.empty()) continue;
    bad.push_back(Json{{"ideal", ideals[i].to_string()}, {"failed", rows[i].failures}, {"verdicts", rows[i].verdicts}});
  }
  out.result["max_degree"] = max_degree;
  out.result["checks"] = std::vector<std::string>(chosen.begin(), chosen.end());
  out.result["scanned"] = ideals.size();
  out.result["burch"] = burch_count;
  out.result["counterexamples"] = bad;
  out.exit_code = bad.empty() ? 0 : 4;
  return out;
}

}  // namespace burch::cli
