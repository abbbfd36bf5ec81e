#include "burch/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace burch {

// ---- Monomial ----

Monomial::Monomial(std::span<const unsigned> exps) {
  if (exps.size() > kMonomialSlots) throw std::invalid_argument("too many exponents");
  exps_.fill(0);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0xffff) throw std::overflow_error("exponent too large");
    exps_[i] = static_cast<std::uint16_t>(exps[i]);
  }
  recompute();
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial Monomial::variable(std::size_t i, unsigned e) {
  Monomial m;
  m.exps_[i] = static_cast<std::uint16_t>(e);
  m.degree_ = e;
  return m;
}

void Monomial::recompute() {
  degree_ = 0;
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMonomialSlots; ++i) {
    unsigned e = unsigned(exps_[i]) + o.exps_[i];
    if (e > 0xffff) throw std::overflow_error("exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial m;
  for (std::size_t i = 0; i < kMonomialSlots; ++i) {
    if (d.exps_[i] > exps_[i]) throw std::domain_error("monomial does not divide");
    m.exps_[i] = exps_[i] - d.exps_[i];
  }
  m.degree_ = degree_ - d.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMonomialSlots; ++i) m.exps_[i] = std::max(exps_[i], o.exps_[i]);
  m.recompute();
  return m;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMonomialSlots; ++i) m.exps_[i] = std::min(exps_[i], o.exps_[i]);
  m.recompute();
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMonomialSlots; ++i)
    if (exps_[i] && o.exps_[i]) return false;
  return true;
}

Monomial Monomial::shifted(std::size_t by) const {
  Monomial m;
  for (std::size_t i = 0; i + by < kMonomialSlots; ++i) m.exps_[i + by] = exps_[i];
  for (std::size_t i = kMonomialSlots - by; i < kMonomialSlots; ++i)
    if (exps_[i]) throw std::overflow_error("monomial shift out of range");
  m.degree_ = degree_;
  return m;
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e) const {
  Monomial m = *this;
  m.exps_[i] = static_cast<std::uint16_t>(e);
  m.recompute();
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

// ---- MonomialOrder ----

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = kMonomialSlots; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    case Kind::lex:
      for (std::size_t i = 0; i < kMonomialSlots; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::elimination:
      if (int c = grevlex_range(a, b, 0, split_)) return c;
      return grevlex_range(a, b, split_, kMonomialSlots);
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::elimination: return "elimination(" + std::to_string(split_) + ")";
  }
  return "?";
}

// ---- RingContext ----

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

RingPtr RingContext::make(std::vector<std::string> names, std::uint32_t modulus) {
  if (names.size() > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  return make_internal(std::move(names), modulus);
}

RingPtr RingContext::make_internal(std::vector<std::string> names, std::uint32_t modulus) {
  if (names.empty()) throw std::invalid_argument("a ring needs at least one variable");
  if (names.size() > kMonomialSlots) throw std::invalid_argument("too many variables");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  return RingPtr(new RingContext(std::move(names), PrimeField(modulus)));
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !a->same_as(*b)) throw std::invalid_argument("polynomials belong to different rings");
}

// ---- Polynomial ----

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Residue r = ring->field().from_int(c);
  Polynomial p(std::move(ring));
  if (r) p.terms_.push_back({r, Monomial()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({1, Monomial::variable(i)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Residue coef, MonomialOrder order) {
  Polynomial p(std::move(ring), order);
  if (coef) p.terms_.push_back({coef, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(std::move(ring), order);
  const PrimeField& F = p.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = F.add(p.terms_.back().coef, t.coef);
      if (!p.terms_.back().coef) p.terms_.pop_back();
    } else if (t.coef) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

Residue Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coef;
  return 0;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::min_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0u;
  unsigned d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(ring_, order, terms_);
}

void Polynomial::check(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (!(order_ == o.order_)) throw std::invalid_argument("polynomials use different monomial orders");
}

namespace {

// Merges a and s*b (both sorted descending) into out.
void merge_add(const PrimeField& F, const MonomialOrder& ord, const std::vector<Term>& a, Residue s,
               const std::vector<Term>& b, const Monomial* shift, std::vector<Term>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = shift ? b[j].mono * *shift : b[j].mono;
    int c = i < a.size() ? ord.compare(a[i].mono, mb) : -1;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({F.mul(s, b[j].coef), mb});
      ++j;
    } else {
      Residue v = F.add(a[i].coef, F.mul(s, b[j].coef));
      if (v) out.push_back({v, a[i].mono});
      ++i;
      ++j;
    }
  }
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  Polynomial p(ring_, order_);
  merge_add(field(), order_, terms_, 1, o.terms_, nullptr, p.terms_);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check(o);
  Polynomial p(ring_, order_);
  merge_add(field(), order_, terms_, field().neg(1), o.terms_, nullptr, p.terms_);
  return p;
}

Polynomial Polynomial::operator-() const { return scaled(field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  const PrimeField& F = field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({F.mul(a.coef, b.coef), a.mono * b.mono});
  return from_terms(ring_, order_, std::move(prod));
}

Polynomial Polynomial::scaled(Residue c) const {
  Polynomial p(ring_, order_);
  if (!c) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coef = field().mul(t.coef, c);
  return p;
}

Polynomial Polynomial::mul_term(Residue c, const Monomial& m) const {
  Polynomial p(ring_, order_);
  if (!c) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({field().mul(t.coef, c), t.mono * m});
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(leading_coefficient()));
}

void Polynomial::sub_mul_term(Residue c, const Monomial& m, const Polynomial& g) {
  std::vector<Term> out;
  merge_add(field(), order_, terms_, field().neg(c), g.terms_, &m, out);
  terms_ = std::move(out);
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  check(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial rem = *this;
  std::vector<Term> q;
  const PrimeField& F = field();
  Residue inv = F.inv(d.leading_coefficient());
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!d.leading_monomial().divides(lt.mono)) throw std::domain_error("inexact polynomial division");
    Term t{F.mul(lt.coef, inv), lt.mono / d.leading_monomial()};
    q.push_back(t);
    rem.sub_mul_term(t.coef, t.mono, d);
  }
  Polynomial out(ring_, order_);
  out.terms_ = std::move(q);
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(ring_ == o.ring_ || ring_->same_as(*o.ring_))) return false;
  if (!(order_ == o.order_)) return with_order(o.order_) == o;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const RingContext& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field().to_signed(t.coef);
    bool neg = c < 0;
    std::uint64_t a = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += monomial_to_string(t.mono, *ring_);
    }
  }
  return out;
}

// ---- Parser ----

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip();
    if (pos_ == s_.size()) return out;
    out.push_back(expr());
    skip();
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      out.push_back(expr());
      skip();
    }
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip();
    Polynomial acc(ring_);
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Polynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected exponent", pos_);
      std::uint64_t e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 0xffff) throw ParseError("exponent too large", start);
      }
      Polynomial r = Polynomial::constant(ring_, 1);
      for (std::uint64_t i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const PrimeField& F = ring_->field();
      Residue v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = F.add(F.mul(v, 10 % F.modulus()), F.from_int(s_[pos_++] - '0'));
      return Polynomial::monomial(ring_, Monomial(), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse_list();
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target) {
  if (images.size() != f.ring()->nvars()) throw std::invalid_argument("substitution needs one image per variable");
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::monomial(target, Monomial(), t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) term = term * images[i];
    out = out + term;
  }
  return out;
}

}  // namespace burch
