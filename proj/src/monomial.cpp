#include "burch/monomial.hpp"

#include <algorithm>

#include "burch/errors.hpp"

namespace burch {

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) { return MonomialOrder::lex().compare(a, b) > 0; }

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), lex_greater);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(minimalize(std::move(gens))) {}

std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal& a) {
  std::vector<Monomial> g;
  for (const auto& p : a.generators()) {
    if (!p.is_monomial()) return std::nullopt;
    g.push_back(p.leading_monomial());
  }
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal MonomialIdeal::maximal(RingPtr ring) {
  std::vector<Monomial> g;
  for (std::size_t i = 0; i < ring->nvars(); ++i) g.push_back(Monomial::variable(i));
  return MonomialIdeal(std::move(ring), std::move(g));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::is_m_primary() const {
  if (contains_unit()) return false;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    bool found = false;
    for (const auto& g : gens_)
      if (g.degree() == g[i] && g[i] > 0) found = true;
    if (!found) return false;
  }
  return true;
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> g;
  for (const auto& m : gens_) g.push_back(Polynomial::monomial(ring_, m));
  return Ideal(ring_, std::move(g));
}

std::string MonomialIdeal::to_string() const { return to_ideal().to_string(); }

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal mono_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x.lcm(y));
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators()) g.push_back(x / x.gcd(m));
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal mono_colon_m(const MonomialIdeal& a) {
  std::optional<MonomialIdeal> acc;
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
    MonomialIdeal c = mono_colon(a, Monomial::variable(i));
    acc = acc ? mono_intersection(*acc, c) : c;
  }
  return *acc;
}

bool witness_valid(const MonomialIdeal& a, const MonomialBurchWitness& w) {
  const Monomial& m = w.generator;
  if (std::find(a.generators().begin(), a.generators().end(), m) == a.generators().end()) return false;
  if (m[w.variable] == 0) return false;
  Monomial base = m / Monomial::variable(w.variable);
  for (std::size_t j = 0; j < a.ring()->nvars(); ++j)
    if (!a.contains(base * Monomial::variable(j))) return false;
  return true;
}

MonomialBurchVerdict burch_monomial(const MonomialIdeal& a) {
  for (const auto& m : a.generators())
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
      MonomialBurchWitness w{m, i};
      if (m[i] > 0 && witness_valid(a, w)) return {true, w};
    }
  return {false, std::nullopt};
}

namespace {

void require_twovar(const MonomialIdeal& a) {
  if (a.ring()->nvars() != 2) throw PreconditionError("two-variable criterion needs exactly 2 variables");
  if (!a.is_m_primary()) throw PreconditionError("ideal is not m-primary: " + a.to_string());
}

}  // namespace

Staircase staircase(const MonomialIdeal& a) {
  require_twovar(a);
  Staircase s;
  for (const auto& g : a.generators()) {
    s.a.push_back(g[0]);
    s.b.push_back(g[1]);
  }
  return s;
}

bool burch_twovar(const MonomialIdeal& a) {
  Staircase s = staircase(a);
  for (std::size_t i = 0; i + 1 < s.a.size(); ++i)
    if (s.a[i] == s.a[i + 1] + 1 || s.b[i] + 1 == s.b[i + 1]) return true;
  return false;
}

PolyMatrix hilbert_burch_twovar(const MonomialIdeal& a) {
  Staircase s = staircase(a);
  const RingPtr& R = a.ring();
  const std::size_t mu = s.a.size();
  PolyMatrix M(R, mu, mu - 1);
  const Residue minus_one = R->field().neg(1);
  for (std::size_t i = 0; i + 1 < mu; ++i) {
    M.at(i, i) = Polynomial::monomial(R, Monomial::variable(1, s.b[i + 1] - s.b[i]));
    M.at(i + 1, i) = Polynomial::monomial(R, Monomial::variable(0, s.a[i] - s.a[i + 1]), minus_one);
  }
  return M;
}

std::uint64_t mprimary_count(unsigned d) {
  // Catalan(d + 2) - 1.
  std::uint64_t c = 1;
  for (unsigned k = 0; k < d + 2; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c - 1;
}

void for_each_mprimary(const RingPtr& ring, unsigned d, const std::function<void(const MonomialIdeal&)>& visit) {
  if (ring->nvars() != 2) throw PreconditionError("the enumerator supports exactly 2 variables");
  if (d > kMaxEnumerationDegree)
    throw PreconditionError("socle degree bound " + std::to_string(d) + " too large (would emit " +
                            std::to_string(mprimary_count(d)) + " ideals; limit is " +
                            std::to_string(kMaxEnumerationDegree) + ")");
  // h[a] = least b with x^a y^b in I; non-increasing, h[a] <= d - a + 1, h[0] >= 1.
  std::vector<unsigned> h(d + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t col) {
    if (col == d + 1) {
      std::vector<Monomial> g;
      std::size_t A = d + 1;
      for (std::size_t c = 0; c <= d; ++c)
        if (h[c] == 0) {
          A = c;
          break;
        }
      for (std::size_t c = 0; c < A; ++c)
        if (c == 0 || h[c] < h[c - 1]) g.push_back(Monomial({static_cast<unsigned>(c), h[c]}));
      g.push_back(Monomial({static_cast<unsigned>(A), 0}));
      visit(MonomialIdeal(ring, std::move(g)));
      return;
    }
    unsigned hi = d - static_cast<unsigned>(col) + 1;
    if (col > 0) hi = std::min(hi, h[col - 1]);
    unsigned lo = col == 0 ? 1 : 0;
    for (unsigned v = lo; v <= hi; ++v) {
      h[col] = v;
      rec(col + 1);
    }
  };
  rec(0);
}

std::vector<MonomialIdeal> enumerate_mprimary(const RingPtr& ring, unsigned d) {
  std::vector<MonomialIdeal> out;
  for_each_mprimary(ring, d, [&](const MonomialIdeal& a) { out.push_back(a); });
  return out;
}

}  // namespace burch
