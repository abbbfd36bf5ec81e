#include "burch/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "burch/errors.hpp"
#include "burch/matrix.hpp"

namespace burch {

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const PrimeField& F = f.field();
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    const Polynomial* div = nullptr;
    for (const auto& d : divisors)
      if (d.leading_monomial().divides(lt.mono)) {
        div = &d;
        break;
      }
    if (div) {
      p.sub_mul_term(F.div(lt.coef, div->leading_coefficient()), lt.mono / div->leading_monomial(), *div);
    } else {
      rem.push_back(lt);
      // Drop the leading term: it has no divisor and stays in the remainder.
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_sorted_terms(p.ring(), p.order(), std::move(rest));
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), f.order(), std::move(rem));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return reduce_by(f.with_order(order_), elements_);
}

bool GroebnerBasis::in_leading_ideal(const Monomial& m) const {
  for (const auto& g : elements_)
    if (g.leading_monomial().divides(m)) return true;
  return false;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  if (!(order_ == o.order_) || elements_.size() != o.elements_.size()) return false;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!(elements_[i] == o.elements_[i])) return false;
  return true;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  // Returns false once the unit ideal is detected.
  bool add(Polynomial h) {
    h = reduce_by(h, active_elements());
    if (h.is_zero()) return true;
    h = h.monic();
    if (h.leading_monomial().is_one()) {
      unit_ = true;
      return false;
    }
    G_.push_back(std::move(h));
    active_.push_back(true);
    update(G_.size() - 1);
    return true;
  }

  GroebnerBasis run() {
    while (!unit_ && !B_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < B_.size(); ++k) {
        int c = order_.compare(B_[k].lcm, B_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(B_[k].j, B_[k].i) < std::tie(B_[best].j, B_[best].i))) best = k;
      }
      Pair p = B_[best];
      B_.erase(B_.begin() + best);
      const Polynomial& a = G_[p.i];
      const Polynomial& b = G_[p.j];
      Polynomial s = a.mul_term(1, p.lcm / a.leading_monomial());
      s.sub_mul_term(1, p.lcm / b.leading_monomial(), b);
      if (!add(std::move(s))) break;
    }
    if (unit_) return GroebnerBasis(ring_, order_, {Polynomial::monomial(ring_, Monomial(), 1, order_)});
    std::vector<Polynomial> basis = active_elements();
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& x, const Polynomial& y) {
      return order_.compare(x.leading_monomial(), y.leading_monomial()) < 0;
    });
    std::vector<Polynomial> reduced;
    reduced.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(l < k ? reduced[l] : basis[l]);
      Term lt = basis[k].leading_term();
      std::vector<Term> tail(basis[k].terms().begin() + 1, basis[k].terms().end());
      Polynomial t = reduce_by(Polynomial::from_sorted_terms(ring_, order_, std::move(tail)), others);
      std::vector<Term> all{lt};
      all.insert(all.end(), t.terms().begin(), t.terms().end());
      reduced.push_back(Polynomial::from_sorted_terms(ring_, order_, std::move(all)));
    }
    return GroebnerBasis(ring_, order_, std::move(reduced));
  }

 private:
  std::vector<Polynomial> active_elements() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < G_.size(); ++k)
      if (active_[k]) out.push_back(G_[k]);
    return out;
  }

  void update(std::size_t h) {
    const Monomial lh = G_[h].leading_monomial();
    std::vector<std::size_t> C, D;
    for (std::size_t k = 0; k < h; ++k)
      if (active_[k]) C.push_back(k);
    auto lcm_h = [&](std::size_t g) { return lh.lcm(G_[g].leading_monomial()); };
    for (std::size_t idx = 0; idx < C.size(); ++idx) {
      std::size_t g1 = C[idx];
      Monomial L1 = lcm_h(g1);
      bool keep = lh.coprime(G_[g1].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t k = idx + 1; k < C.size() && keep; ++k)
          if (lcm_h(C[k]).divides(L1)) keep = false;
        for (std::size_t k = 0; k < D.size() && keep; ++k)
          if (lcm_h(D[k]).divides(L1)) keep = false;
      }
      if (keep) D.push_back(g1);
    }
    std::vector<Pair> next;
    for (const auto& p : B_) {
      bool drop = lh.divides(p.lcm) && !(lcm_h(p.i) == p.lcm) && !(lcm_h(p.j) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (std::size_t g : D)
      if (!lh.coprime(G_[g].leading_monomial())) next.push_back({g, h, lcm_h(g)});
    B_ = std::move(next);
    for (std::size_t k = 0; k < h; ++k)
      if (active_[k] && lh.divides(G_[k].leading_monomial())) active_[k] = false;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> G_;
  std::vector<bool> active_;
  std::vector<Pair> B_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis groebner(const RingPtr& ring, const std::vector<Polynomial>& gens, MonomialOrder order) {
  Buchberger bb(ring, order);
  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) input.push_back(g.with_order(order));
  }
  // Smaller leading monomials first keeps intermediate reductions short.
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (auto& g : input)
    if (!bb.add(g)) break;
  return bb.run();
}

// ---- Ideal ----

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    Polynomial p = g.with_order(MonomialOrder::grevlex());
    if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(std::move(p));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::parse(const RingPtr& ring, std::string_view text) {
  return Ideal(ring, parse_polynomial_list(text, ring));
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [&] { cache_->gb.emplace(groebner(ring_, gens_)); });
  return *cache_->gb;
}

bool Ideal::in_maximal() const {
  for (const auto& g : gens_)
    if (g.constant_term()) return false;
  return true;
}

bool Ideal::is_monomial() const {
  for (const auto& g : gens_)
    if (!g.is_monomial()) return false;
  return true;
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::contains(const Ideal& J) const {
  require_same_ring(ring_, J.ring());
  for (const auto& g : J.generators())
    if (!contains(g)) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.gb() == b.gb();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

namespace {

// Drops monomial generators divisible by another one.
std::vector<Polynomial> minimal_monomials(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Monomial& m = gens[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& n = gens[j].leading_monomial();
      if (n.divides(m) && (!(n == m) || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(gens[i].monic());
  }
  return out;
}

}  // namespace

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> g;
  for (const auto& f : a.generators())
    for (const auto& h : b.generators()) g.push_back(f * h);
  if (a.is_monomial() && b.is_monomial()) g = minimal_monomials(std::move(g));
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  Ideal r = Ideal::unit(a.ring());
  for (unsigned i = 0; i < k; ++i) r = ideal_product(r, a);
  return r;
}

namespace {

Monomial drop_first_slot(const Monomial& m) {
  std::array<unsigned, kMonomialSlots> e{};
  for (std::size_t i = 1; i < kMonomialSlots; ++i) e[i - 1] = m[i];
  return Monomial(std::span<const unsigned>(e.data(), e.size()));
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& R = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(R);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Polynomial> g;
    for (const auto& f : a.generators())
      for (const auto& h : b.generators())
        g.push_back(Polynomial::monomial(R, f.leading_monomial().lcm(h.leading_monomial())));
    return Ideal(R, minimal_monomials(std::move(g)));
  }
  // Eliminate t from t*a + (1-t)*b.
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), R->names().begin(), R->names().end());
  RingPtr T = RingContext::make_internal(names, R->field().modulus());
  const MonomialOrder elim = MonomialOrder::elimination(1);
  auto lift = [&](const Polynomial& f) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) ts.push_back({t.coef, t.mono.shifted(1)});
    return Polynomial::from_terms(T, elim, std::move(ts));
  };
  Polynomial t = Polynomial::monomial(T, Monomial::variable(0), 1, elim);
  Polynomial one_minus_t = Polynomial::monomial(T, Monomial(), 1, elim) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * lift(f));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * lift(f));
  GroebnerBasis G = groebner(T, gens, elim);
  std::vector<Polynomial> out;
  for (const auto& g : G.elements()) {
    if (g.leading_monomial()[0] != 0) continue;
    std::vector<Term> ts;
    for (const auto& term : g.terms()) ts.push_back({term.coef, drop_first_slot(term.mono)});
    out.push_back(Polynomial::from_terms(R, MonomialOrder::grevlex(), std::move(ts)));
  }
  return Ideal(R, std::move(out));
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  const RingPtr& R = a.ring();
  if (f.is_zero()) throw PreconditionError("colon by the zero ideal");
  if (a.contains(f)) return Ideal::unit(R);
  if (a.is_monomial() && f.is_monomial()) {
    std::vector<Polynomial> g;
    const Monomial& m = f.leading_monomial();
    for (const auto& h : a.generators()) {
      const Monomial& n = h.leading_monomial();
      g.push_back(Polynomial::monomial(R, n / n.gcd(m)));
    }
    return Ideal(R, minimal_monomials(std::move(g)));
  }
  Ideal inter = ideal_intersection(a, Ideal(R, {f}));
  Polynomial fg = f.with_order(MonomialOrder::grevlex());
  std::vector<Polynomial> g;
  for (const auto& h : inter.generators()) g.push_back(h.divide_exact(fg));
  return Ideal(R, std::move(g));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    Ideal c = ideal_colon(a, g);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  return *acc;
}

Ideal trim(const Ideal& a) { return Ideal(a.ring(), a.gb().elements()); }

bool is_zero_dimensional(const Ideal& a) {
  const auto& G = a.gb();
  if (G.is_unit()) return true;
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
    bool found = false;
    for (const auto& g : G.elements()) {
      const Monomial& m = g.leading_monomial();
      if (m[i] > 0 && m.degree() == m[i]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::vector<Monomial> enumerate_standard(const GroebnerBasis& G, std::size_t nvars) {
  if (G.is_unit()) return {};
  std::vector<Monomial> out{Monomial()};
  std::set<Monomial> seen{Monomial()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial m = out[k] * Monomial::variable(i);
      if (seen.count(m) || G.in_leading_ideal(m)) continue;
      seen.insert(m);
      out.push_back(m);
    }
  }
  const auto ord = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return ord.less(x, y); });
  return out;
}

}  // namespace

bool is_m_primary(const Ideal& a) {
  if (!is_zero_dimensional(a) || a.is_unit()) return false;
  std::size_t N = enumerate_standard(a.gb(), a.ring()->nvars()).size();
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i)
    if (!a.contains(Polynomial::monomial(a.ring(), Monomial::variable(i, static_cast<unsigned>(N)))))
      return false;
  return true;
}

std::vector<Monomial> standard_monomials(const Ideal& a) {
  if (!is_zero_dimensional(a)) throw PreconditionError("quotient is not finite dimensional: " + a.to_string());
  return enumerate_standard(a.gb(), a.ring()->nvars());
}

std::size_t quotient_length(const Ideal& a) { return standard_monomials(a).size(); }

std::size_t minimal_generator_count(const Ideal& a) {
  if (a.is_zero()) return 0;
  if (a.is_homogeneous()) {
    std::vector<Polynomial> gens = a.generators();
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Polynomial& x, const Polynomial& y) { return x.total_degree() < y.total_degree(); });
    std::vector<Polynomial> kept;
    for (const auto& g : gens) {
      if (!kept.empty() && Ideal(a.ring(), kept).contains(g)) continue;
      kept.push_back(g);
    }
    return kept.size();
  }
  if (is_m_primary(a)) return quotient_length(ideal_product(Ideal::maximal(a.ring()), a)) - quotient_length(a);
  throw PreconditionError("minimal generator count needs a homogeneous or m-primary ideal");
}

// ---- Syzygies ----

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).to_string();
    }
  }
  return s + "]";
}

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  // Enumerate compositions of d into nvars parts.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const unsigned>(e.data(), e.size()));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

}  // namespace

SyzygyMatrix syzygy_matrix(const Ideal& a) {
  const RingPtr& R = a.ring();
  const PrimeField& F = R->field();
  const auto& gens = a.generators();
  const std::size_t mu = gens.size();
  std::vector<unsigned> deg(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    auto d = gens[i].homogeneous_degree();
    if (!d) throw PreconditionError("syzygies need homogeneous generators; " + gens[i].to_string() + " is not");
    deg[i] = *d;
  }
  for (std::size_t i = 0; i < mu; ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < mu; ++j)
      if (j != i) others.push_back(gens[j]);
    if (!others.empty() && Ideal(R, others).contains(gens[i]))
      throw PreconditionError("generator " + gens[i].to_string() + " is redundant");
  }
  PolyMatrix empty(R, mu, 0);
  if (mu < 2) return {empty, true};

  const auto& G = a.gb().elements();
  unsigned dmax = *std::max_element(deg.begin(), deg.end());
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      dmax = std::max(dmax, G[i].leading_monomial().lcm(G[j].leading_monomial()).degree());
  unsigned dmin = *std::min_element(deg.begin(), deg.end());
  const std::size_t n = R->nvars();

  struct Syz {
    unsigned degree;
    std::vector<Polynomial> entries;
  };
  std::vector<Syz> chosen;
  std::map<unsigned, std::vector<Monomial>> mono_cache;
  auto monos = [&](unsigned d) -> const std::vector<Monomial>& {
    auto it = mono_cache.find(d);
    if (it == mono_cache.end()) it = mono_cache.emplace(d, monomials_of_degree(n, d)).first;
    return it->second;
  };

  for (unsigned D = dmin; D <= dmax; ++D) {
    // Unknowns: (generator i, monomial of degree D - deg i).
    std::vector<std::pair<std::size_t, Monomial>> unknowns;
    std::map<std::pair<std::size_t, Monomial>, std::size_t> unknown_index;
    for (std::size_t i = 0; i < mu; ++i) {
      if (deg[i] > D) continue;
      for (const auto& m : monos(D - deg[i])) {
        unknown_index[{i, m}] = unknowns.size();
        unknowns.emplace_back(i, m);
      }
    }
    const auto& targets = monos(D);
    std::map<Monomial, std::size_t> target_index;
    for (std::size_t k = 0; k < targets.size(); ++k) target_index[targets[k]] = k;
    FieldMatrix A(F, targets.size(), unknowns.size());
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      for (const auto& t : gens[unknowns[c].first].terms())
        A.at(target_index.at(t.mono * unknowns[c].second), c) = t.coef;
    FieldMatrix K = kernel_basis(A);
    if (K.cols() == 0) continue;

    auto to_vector = [&](const std::vector<Polynomial>& s, const Monomial& u) {
      Vector v(unknowns.size(), 0);
      for (std::size_t i = 0; i < mu; ++i)
        for (const auto& t : s[i].terms()) v[unknown_index.at({i, t.mono * u})] = t.coef;
      return v;
    };
    Subspace span(F, unknowns.size());
    for (const auto& s : chosen)
      for (const auto& u : monos(D - s.degree)) span.insert(to_vector(s.entries, u));
    for (std::size_t c = 0; c < K.cols(); ++c) {
      Vector v = K.column(c);
      if (!span.insert(v)) continue;
      std::vector<std::vector<Term>> terms(mu);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) terms[unknowns[k].first].push_back({v[k], unknowns[k].second});
      std::vector<Polynomial> entries;
      for (auto& t : terms) entries.push_back(Polynomial::from_terms(R, MonomialOrder::grevlex(), std::move(t)));
      // Normalize so the first nonzero entry is monic.
      for (const auto& e : entries)
        if (!e.is_zero()) {
          Residue s = F.inv(e.leading_coefficient());
          for (auto& x : entries) x = x.scaled(s);
          break;
        }
      chosen.push_back({D, std::move(entries)});
    }
  }
  PolyMatrix M(R, mu, chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (std::size_t r = 0; r < mu; ++r) M.at(r, c) = chosen[c].entries[r];
  return {M, true};
}

Ideal entry_ideal(const PolyMatrix& m) {
  std::vector<Polynomial> g;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) g.push_back(m(r, c));
  return Ideal(m.ring(), std::move(g));
}

}  // namespace burch
