#include "burch/burch.hpp"

#include <algorithm>

namespace burch {

namespace {

void require_in_maximal(const Ideal& I) {
  if (!I.in_maximal()) throw PreconditionError("generators must lie in the maximal ideal: " + I.to_string());
}

AlgebraPtr build(const Ideal& I) { return QuotientAlgebra::build(I); }

}  // namespace

BurchReport burch_ideal_test(const Ideal& I) {
  if (I.is_zero()) throw PreconditionError("the zero ideal is never Burch");
  require_in_maximal(I);
  const RingPtr& S = I.ring();
  Ideal m = Ideal::maximal(S);
  Ideal colon = ideal_colon(I, m);
  Ideal mI = ideal_product(m, I);
  Ideal mC = ideal_product(m, colon);
  BurchReport rep;
  rep.burch = !ideal_equal(mI, mC);
  rep.depth_zero = !ideal_equal(colon, I);
  if (rep.burch)
    for (const auto& g : mC.generators())
      if (!mI.contains(g)) {
        rep.witness = g;
        break;
      }
  if (rep.burch && !rep.depth_zero) throw ConsistencyError("Burch ideal with positive depth quotient");
  if (is_m_primary(I)) {
    AlgebraPtr A = build(I);
    IdealInvariants inv;
    inv.length = A->dim();
    inv.edim = A->edim();
    inv.type = A->type();
    inv.hilbert = A->hilbert_function();
    inv.mu = minimal_generator_count(I);
    inv.mu_mi = minimal_generator_count(mI);
    inv.choi = quotient_length(mI) - quotient_length(mC);
    inv.c_r = c_invariant(*A).value;
    rep.invariants = std::move(inv);
  }
  return rep;
}

bool Prop23Record::agree() const {
  std::optional<bool> first;
  for (const auto& v : {definition, colon, socle_product, type_count}) {
    if (!v) continue;
    if (first && *first != *v) return false;
    first = v;
  }
  return true;
}

Prop23Record prop23_crosscheck(const Ideal& I) {
  Prop23Record rec;
  BurchReport rep = burch_ideal_test(I);
  rec.definition = rep.burch;
  Ideal m = Ideal::maximal(I.ring());
  Ideal mI = ideal_product(m, I);
  rec.colon = !ideal_equal(ideal_colon(I, m), ideal_colon(mI, m));
  if (!is_m_primary(I)) {
    rec.notices.push_back("ideal is not m-primary; socle and type routes skipped");
    return rec;
  }
  AlgebraPtr A = build(I);
  bool outside = false;
  for (const auto& s : A->socle()) {
    Polynomial f = A->lift(s);
    for (std::size_t i = 0; i < A->nvars() && !outside; ++i)
      if (!mI.contains(f * Polynomial::variable(I.ring(), i))) outside = true;
  }
  rec.socle_product = outside;
  AlgebraPtr B = build(mI);
  rec.type_count = rep.depth_zero && B->type() != A->type() + minimal_generator_count(I);
  return rec;
}

bool weakly_m_full_test(const Ideal& I) {
  require_in_maximal(I);
  Ideal m = Ideal::maximal(I.ring());
  return ideal_equal(ideal_colon(ideal_product(m, I), m), I);
}

MFullVerdict m_full_test(const Ideal& I, std::size_t trials, std::uint64_t seed) {
  require_in_maximal(I);
  const RingPtr& S = I.ring();
  Ideal mI = ideal_product(Ideal::maximal(S), I);
  MFullVerdict out;
  auto attempt = [&](const Polynomial& x) {
    if (x.is_zero()) return false;
    ++out.tested;
    if (ideal_equal(ideal_colon(mI, x), I)) {
      out.found = true;
      out.witness = x;
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < S->nvars(); ++i)
    if (attempt(Polynomial::variable(S, i))) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> coef(0, S->field().modulus() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < S->nvars(); ++i) terms.push_back({coef(rng), Monomial::variable(i)});
    terms.erase(std::remove_if(terms.begin(), terms.end(), [](const Term& t) { return t.coef == 0; }), terms.end());
    if (attempt(Polynomial::from_terms(S, MonomialOrder::grevlex(), std::move(terms)))) return out;
  }
  return out;
}

std::size_t choi_invariant(const Ideal& I) {
  require_in_maximal(I);
  Ideal m = Ideal::maximal(I.ring());
  Ideal mI = ideal_product(m, I);
  Ideal mJ = ideal_product(m, ideal_colon(I, m));
  if (is_m_primary(I)) return quotient_length(mI) - quotient_length(mJ);
  if (!I.is_homogeneous()) throw PreconditionError("Choi invariant needs an m-primary or homogeneous ideal");
  // n(I:n)/nI is killed by n, so it lives in degrees up to the top generator degree of n(I:n).
  unsigned top = 0;
  for (const auto& g : mJ.gb().elements()) top = std::max(top, g.total_degree());
  Ideal cut = ideal_power(m, top + 1);
  return quotient_length(ideal_sum(mI, cut)) - quotient_length(ideal_sum(mJ, cut));
}

CInvariant c_invariant(const QuotientAlgebra& R) {
  CInvariant c;
  c.socle = R.type();
  if (R.is_field()) {
    // R' = 0: its Koszul term and embedding dimension are taken to be 0.
    c.degenerate = true;
    c.value = c.socle;
    return c;
  }
  c.h1 = koszul_h1(R);
  c.edim = R.edim();
  AlgebraPtr Rp = build(socle_quotient_ideal(R));
  c.h1_reduced = koszul_h1(*Rp);
  c.edim_reduced = Rp->edim();
  long long v = static_cast<long long>(c.socle + c.h1 + c.edim_reduced) -
                static_cast<long long>(c.edim + c.h1_reduced);
  if (v < 0) throw ConsistencyError("negative c invariant");
  c.value = static_cast<std::size_t>(v);
  return c;
}

RingVerdict burch_ring_depth_zero(const QuotientAlgebra& R) {
  RingVerdict v;
  CInvariant c = c_invariant(R);
  v.c = c.value;
  if (R.is_field()) {
    v.trivial = true;
    v.burch = true;
    return v;
  }
  SummandVerdict s = k_summand_test(syzygy(residue_field(R.shared_from_this()), 2));
  v.burch = c.value > 0;
  v.summand = s.summand;
  v.witness = s.witness;
  if (v.burch != v.summand)
    throw ConsistencyError("c invariant and second syzygy of k disagree for " + R.ideal().to_string());
  return v;
}

GorensteinBurch gorenstein_burch_classifier(const Ideal& I) {
  if (!is_m_primary(I)) throw PreconditionError("ideal is not m-primary: " + I.to_string());
  AlgebraPtr A = build(I);
  GorensteinBurch g;
  g.gorenstein = A->is_gorenstein();
  g.burch = burch_ideal_test(I).burch;
  g.edim = A->edim();
  g.length = A->dim();
  if (g.gorenstein) g.consistent = g.burch == (g.edim <= 1);
  return g;
}

CubeZeroVerdict cube_zero_test(const QuotientAlgebra& R) {
  if (!R.maximal_power(3).empty()) throw PreconditionError("the cube of the maximal ideal is not zero");
  CubeZeroVerdict v;
  v.edim = R.edim();
  v.type = R.type();
  v.beta2 = minimal_resolution(residue_field(R.shared_from_this()), 2).betti()[2];
  v.burch = v.beta2 + v.type > v.edim * v.edim;
  return v;
}

bool p1_condition(const Ideal& I, const Ideal& J, const PolyMatrix& A) {
  if (!J.contains(I)) throw PreconditionError("first ideal is not contained in the second");
  Ideal n = Ideal::maximal(I.ring());
  Ideal left = ideal_colon(I, J);
  Ideal denom = ideal_product(ideal_colon(J, n), entry_ideal(A));
  if (denom.is_zero()) throw PreconditionError("presentation matrix has no nonzero entries");
  Ideal right = ideal_colon(ideal_product(I, J), denom);
  return !right.contains(left);
}

Lemma62Verdict lemma62_test(const Ideal& I) {
  if (I.ring()->nvars() != 2) throw PreconditionError("the generator-count criterion needs exactly 2 variables");
  if (!is_m_primary(I)) throw PreconditionError("ideal is not m-primary: " + I.to_string());
  Lemma62Verdict v;
  v.mu = minimal_generator_count(I);
  v.mu_mi = minimal_generator_count(ideal_product(Ideal::maximal(I.ring()), I));
  v.burch = v.mu_mi < 2 * v.mu;
  return v;
}

CutResult cut_down(const Ideal& I, const std::vector<Polynomial>& elems, bool allow_nonlinear) {
  const RingPtr& S = I.ring();
  const PrimeField& F = S->field();
  Ideal cur = I;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < S->nvars(); ++i) images.push_back(Polynomial::variable(S, i));
  CutResult out{I, {}};
  for (const auto& f : elems) {
    require_same_ring(f.ring(), S);
    const RingPtr C = cur.ring();
    Polynomial g = substitute(f, images, C);
    if (g.is_zero()) throw NotRegularError(f.to_string(), "1");
    if (g.constant_term() != 0) throw PreconditionError("cut element " + f.to_string() + " is a unit");
    Ideal colon = ideal_colon(cur, g);
    if (!ideal_equal(colon, cur)) {
      for (const auto& h : colon.generators())
        if (!cur.contains(h)) throw NotRegularError(f.to_string(), h.to_string());
    }
    if (g.homogeneous_degree() == 1u) {
      std::size_t p = 0;
      Residue cp = 0;
      for (const auto& t : g.terms())
        for (std::size_t i = 0; i < C->nvars(); ++i)
          if (t.mono[i] == 1 && (cp == 0 || i < p)) {
            p = i;
            cp = t.coef;
          }
      if (C->nvars() == 1) throw PreconditionError("cannot eliminate the last variable");
      std::vector<std::string> names;
      for (std::size_t i = 0; i < C->nvars(); ++i)
        if (i != p) names.push_back(C->names()[i]);
      RingPtr T = RingContext::make(names, F.modulus());
      // x_p = -(1/c_p) * sum_{i != p} c_i x_i
      std::vector<Polynomial> sub;
      for (std::size_t i = 0, k = 0; i < C->nvars(); ++i)
        sub.push_back(i == p ? Polynomial(T) : Polynomial::variable(T, k++));
      Polynomial rest(T);
      Residue scale = F.neg(F.inv(cp));
      for (const auto& t : g.terms()) {
        std::size_t i = 0;
        while (t.mono[i] == 0) ++i;
        if (i != p) rest = rest + sub[i].scaled(F.mul(scale, t.coef));
      }
      sub[p] = rest;
      std::vector<Polynomial> gens;
      for (const auto& h : cur.generators()) gens.push_back(substitute(h, sub, T));
      cur = Ideal(T, std::move(gens));
      for (auto& im : images) im = substitute(im, sub, T);
      out.eliminated.push_back(C->names()[p]);
    } else if (allow_nonlinear) {
      std::vector<Polynomial> gens = cur.generators();
      gens.push_back(g);
      cur = Ideal(C, std::move(gens));
    } else {
      throw PreconditionError("cut element " + f.to_string() + " is not a linear form");
    }
  }
  out.ideal = trim(cur);
  return out;
}

FibreVerdict fibre_burch(const QuotientAlgebra& S, const QuotientAlgebra& T) {
  if (S.is_field() || T.is_field()) throw PreconditionError("trivial fibre product; test the other factor directly");
  FibreVerdict v;
  v.c_s = c_invariant(S).value;
  v.c_t = c_invariant(T).value;
  std::size_t es = S.edim(), et = T.edim();
  std::size_t es2 = build(socle_quotient_ideal(S))->edim(), et2 = build(socle_quotient_ideal(T))->edim();
  v.n_term = static_cast<long long>(es * et) - static_cast<long long>(es2 * et2);
  v.burch = v.c_s > 0 || v.c_t > 0 || v.n_term > 0;
  v.direct = burch_ring_depth_zero(*build(fibre_product(S, T).ideal)).burch;
  if (v.burch != v.direct) throw ConsistencyError("fibre product criterion disagrees with the direct test");
  return v;
}

std::vector<AlgebraModule> sample_modules(const AlgebraPtr& R, std::size_t count, std::mt19937_64& rng) {
  std::vector<AlgebraModule> out;
  if (R->is_field()) return out;
  const PrimeField& F = R->field();
  std::uniform_int_distribution<Residue> coef(1, F.modulus() - 1);
  std::uniform_int_distribution<std::size_t> pick(1, R->dim() - 1), small(1, 2);
  auto random_in_m = [&] {
    AlgebraElement a = R->zero();
    for (std::size_t k = small(rng); k > 0; --k) a[pick(rng)] = coef(rng);
    return a;
  };
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    std::optional<AlgebraModule> M;
    if (attempt % 2 == 0) {
      std::vector<Polynomial> gens = R->ideal().generators();
      for (std::size_t k = small(rng); k > 0; --k) gens.push_back(R->lift(random_in_m()));
      M = module_from_cyclic(R, Ideal(R->ring(), std::move(gens)));
    } else {
      std::size_t rows = small(rng), cols = small(rng);
      std::vector<Vector> columns;
      for (std::size_t c = 0; c < cols; ++c) {
        Vector v;
        for (std::size_t r = 0; r < rows; ++r) {
          AlgebraElement a = random_in_m();
          v.insert(v.end(), a.begin(), a.end());
        }
        columns.push_back(std::move(v));
      }
      M = cokernel(R, rows, columns, "coker");
    }
    if (M->dim() == 0 || minimal_resolution(*M, 1).betti()[1] == 0) continue;
    out.push_back(std::move(*M));
  }
  return out;
}

}  // namespace burch
