#include "burch/artinian.hpp"

#include <algorithm>

#include "burch/errors.hpp"

namespace burch {

AlgebraPtr QuotientAlgebra::build(const Ideal& I) {
  if (!is_m_primary(I)) throw PreconditionError("ideal is not m-primary: " + I.to_string());
  std::shared_ptr<QuotientAlgebra> R(new QuotientAlgebra(I));
  R->populate();
  return R;
}

void QuotientAlgebra::populate() {
  basis_ = standard_monomials(ideal_);
  const std::size_t n = basis_.size(), nv = nvars();
  const PrimeField& F = field();
  parent_.assign(n, 0);
  via_.assign(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t i = 0;
    while (basis_[j][i] == 0) ++i;
    via_[j] = i;
    parent_[j] = *index_of(basis_[j] / Monomial::variable(i));
  }
  for (std::size_t i = 0; i < nv; ++i) {
    FieldMatrix M(F, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m = basis_[j] * Monomial::variable(i);
      if (auto k = index_of(m)) {
        M.at(*k, j) = 1;
        continue;
      }
      AlgebraElement v = element(Polynomial::monomial(ring(), m));
      for (std::size_t k = 0; k < n; ++k) M.at(k, j) = v[k];
    }
    mult_.push_back(std::move(M));
  }

  // m-adic filtration.
  std::vector<AlgebraElement> all;
  for (std::size_t j = 0; j < n; ++j) {
    AlgebraElement e(n, 0);
    e[j] = 1;
    all.push_back(e);
  }
  powers_.push_back(all);
  while (true) {
    Subspace S(F, n);
    for (const auto& v : powers_.back())
      for (std::size_t i = 0; i < nv; ++i) S.insert(mult_[i].apply(v));
    if (S.dim() == 0) break;
    powers_.push_back(S.basis());
    power_spaces_.push_back(std::move(S));
  }
  for (std::size_t k = 0; k < powers_.size(); ++k) {
    std::size_t hi = powers_[k].size(), lo = k + 1 < powers_.size() ? powers_[k + 1].size() : 0;
    hilbert_.push_back(hi - lo);
  }

  if (powers_.size() > 1) {
    Subspace S(F, n);
    if (powers_.size() > 2)
      for (const auto& v : powers_[2]) S.insert(v);
    for (std::size_t i = 0; i < nv; ++i)
      if (S.insert(variable(i))) min_vars_.push_back(i);
  }

  FieldMatrix stacked(F, nv * n, n);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = mult_[i](r, c);
  FieldMatrix K = kernel_basis(stacked);
  for (std::size_t c = 0; c < K.cols(); ++c) socle_.push_back(K.column(c));
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), m, [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::grevlex().compare(a, b) < 0;
  });
  if (it != basis_.end() && *it == m) return static_cast<std::size_t>(it - basis_.begin());
  return std::nullopt;
}

AlgebraElement QuotientAlgebra::one() const {
  AlgebraElement e = zero();
  e[0] = dim() > 0 ? 1 : 0;
  return e;
}

AlgebraElement QuotientAlgebra::variable(std::size_t i) const {
  return element(Polynomial::variable(ring(), i));
}

AlgebraElement QuotientAlgebra::element(const Polynomial& f) const {
  require_same_ring(f.ring(), ring());
  Polynomial r = ideal_.gb().normal_form(f.with_order(MonomialOrder::grevlex()));
  AlgebraElement v = zero();
  for (const auto& t : r.terms()) {
    auto k = index_of(t.mono);
    if (!k) throw ConsistencyError("normal form left the standard monomials");
    v[*k] = t.coef;
  }
  return v;
}

AlgebraElement QuotientAlgebra::parse(std::string_view text) const { return element(parse_polynomial(text, ring())); }

Polynomial QuotientAlgebra::lift(const AlgebraElement& a) const {
  std::vector<Term> t;
  for (std::size_t j = 0; j < dim(); ++j)
    if (a[j]) t.push_back({a[j], basis_[j]});
  return Polynomial::from_terms(ring(), MonomialOrder::grevlex(), std::move(t));
}

std::vector<AlgebraElement> QuotientAlgebra::basis_multiples(const AlgebraElement& v) const {
  std::vector<AlgebraElement> w(dim());
  if (dim() == 0) return w;
  w[0] = v;
  for (std::size_t j = 1; j < dim(); ++j) w[j] = mult_[via_[j]].apply(w[parent_[j]]);
  return w;
}

AlgebraElement QuotientAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  std::vector<AlgebraElement> w = basis_multiples(b);
  AlgebraElement out = zero();
  for (std::size_t j = 0; j < dim(); ++j)
    if (a[j]) axpy(field(), out, a[j], w[j]);
  return out;
}

FieldMatrix QuotientAlgebra::mult_matrix(const AlgebraElement& a) const {
  return FieldMatrix::from_columns(field(), dim(), basis_multiples(a));
}

std::vector<AlgebraElement> QuotientAlgebra::maximal_power(std::size_t k) const {
  return k < powers_.size() ? powers_[k] : std::vector<AlgebraElement>{};
}

std::size_t QuotientAlgebra::order(const AlgebraElement& a) const {
  if (std::all_of(a.begin(), a.end(), [](Residue r) { return r == 0; })) return dim();
  std::size_t k = 0;
  while (k < power_spaces_.size() && power_spaces_[k].contains(a)) ++k;
  return k;
}

TypeAndGorenstein type_and_gorenstein(const QuotientAlgebra& R) { return {R.type(), R.is_gorenstein()}; }

namespace {

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; });
}

// Minimal generators of the ideal with the given basis, preferring candidates in order.
AlgebraIdeal finish_ideal(const QuotientAlgebra& R, const Subspace& J, std::vector<AlgebraElement> preferred) {
  AlgebraIdeal out;
  out.basis = J.basis();
  Subspace mJ(R.field(), R.dim());
  for (const auto& v : out.basis)
    for (std::size_t i = 0; i < R.nvars(); ++i) mJ.insert(R.mult(i).apply(v));
  for (const auto& v : out.basis) preferred.push_back(v);
  for (const auto& v : preferred)
    if (mJ.insert(v)) out.minimal_generators.push_back(v);
  return out;
}

}  // namespace

AlgebraIdeal ideal_generated(const QuotientAlgebra& R, const std::vector<AlgebraElement>& gens) {
  Subspace J(R.field(), R.dim());
  for (const auto& g : gens)
    for (const auto& w : R.basis_multiples(g)) J.insert(w);
  std::vector<AlgebraElement> pref;
  for (const auto& g : gens)
    if (!is_zero_vector(g)) pref.push_back(g);
  return finish_ideal(R, J, std::move(pref));
}

AlgebraIdeal ideal_from_space(const QuotientAlgebra& R, std::vector<AlgebraElement> space) {
  Subspace J(R.field(), R.dim());
  for (const auto& v : space) J.insert(v);
  for (const auto& v : J.basis())
    for (std::size_t i = 0; i < R.nvars(); ++i)
      if (!J.contains(R.mult(i).apply(v))) throw PreconditionError("subspace is not an ideal");
  std::stable_sort(space.begin(), space.end(),
                   [&](const AlgebraElement& a, const AlgebraElement& b) { return R.order(a) < R.order(b); });
  return finish_ideal(R, J, std::move(space));
}

AlgebraIdeal annihilator(const QuotientAlgebra& R, const AlgebraElement& a) {
  FieldMatrix K = kernel_basis(R.mult_matrix(a));
  std::vector<AlgebraElement> space;
  for (std::size_t c = 0; c < K.cols(); ++c) space.push_back(K.column(c));
  return ideal_from_space(R, std::move(space));
}

bool same_space(const PrimeField& F, const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t ambient) {
  Subspace A(F, ambient), B(F, ambient);
  for (const auto& v : a) A.insert(v);
  for (const auto& v : b) B.insert(v);
  if (A.dim() != B.dim()) return false;
  for (const auto& v : b)
    if (!A.contains(v)) return false;
  return true;
}

bool is_exact_pair(const QuotientAlgebra& R, const AlgebraElement& a, const AlgebraElement& b) {
  if (is_zero_vector(a) || is_zero_vector(b) || a[0] || b[0]) return false;
  if (!is_zero_vector(R.multiply(a, b))) return false;
  const std::size_t n = R.dim();
  std::size_t ann_a = n - rank(R.mult_matrix(a)), ann_b = n - rank(R.mult_matrix(b));
  return ann_a == rank(R.mult_matrix(b)) && ann_b == rank(R.mult_matrix(a));
}

std::vector<ExactPair> find_exact_pairs(const QuotientAlgebra& R, const std::vector<AlgebraElement>& extra) {
  std::vector<AlgebraElement> cand;
  for (std::size_t i = 0; i < R.nvars(); ++i) cand.push_back(R.variable(i));
  for (std::size_t i = 0; i < R.nvars(); ++i)
    for (std::size_t j = i + 1; j < R.nvars(); ++j) {
      AlgebraElement s = R.variable(i);
      axpy(R.field(), s, 1, R.variable(j));
      cand.push_back(s);
    }
  for (const auto& e : extra) cand.push_back(e);
  std::vector<ExactPair> out;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i; j < cand.size(); ++j)
      if (is_exact_pair(R, cand[i], cand[j])) out.push_back({cand[i], cand[j]});
  return out;
}

FibreProduct fibre_product(const QuotientAlgebra& S, const QuotientAlgebra& T) {
  if (!(S.field() == T.field())) throw PreconditionError("fibre product factors use different moduli");
  if (S.is_field()) return {T.ideal(), true};
  if (T.is_field()) return {S.ideal(), true};
  std::vector<std::string> names = S.ring()->names();
  for (const auto& n : T.ring()->names()) {
    if (std::find(names.begin(), names.end(), n) != names.end())
      throw PreconditionError("fibre product factors share variable " + n);
    names.push_back(n);
  }
  if (names.size() > kMaxVariables)
    throw PreconditionError("fibre product needs " + std::to_string(names.size()) + " variables; limit is " +
                            std::to_string(kMaxVariables));
  RingPtr P = RingContext::make(names, S.field().modulus());
  const std::size_t a = S.nvars();
  std::vector<Polynomial> left, right;
  for (std::size_t i = 0; i < a; ++i) left.push_back(Polynomial::variable(P, i));
  for (std::size_t i = 0; i < T.nvars(); ++i) right.push_back(Polynomial::variable(P, a + i));
  std::vector<Polynomial> gens;
  for (const auto& g : S.ideal().generators()) gens.push_back(substitute(g, left, P));
  for (const auto& g : T.ideal().generators()) gens.push_back(substitute(g, right, P));
  for (const auto& x : left)
    for (const auto& y : right) gens.push_back(x * y);
  return {Ideal(P, std::move(gens)), false};
}

Ideal socle_quotient_ideal(const QuotientAlgebra& R) {
  std::vector<Polynomial> gens = R.ideal().generators();
  for (const auto& s : R.socle()) gens.push_back(R.lift(s));
  return Ideal(R.ring(), std::move(gens));
}

}  // namespace burch
