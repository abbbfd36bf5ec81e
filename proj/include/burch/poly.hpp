#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burch/field.hpp"

namespace burch {

inline constexpr std::size_t kMaxVariables = 8;
// Internal rings may carry extra variables (elimination parameters).
inline constexpr std::size_t kMonomialSlots = 10;

class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(std::span<const unsigned> exps);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial variable(std::size_t i, unsigned e = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMonomialSlots; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  // Requires d | *this.
  Monomial operator/(const Monomial& d) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  // Exponent vector with slot i shifted to slot i + by (used when embedding rings).
  Monomial shifted(std::size_t by) const;
  Monomial with_exponent(std::size_t i, unsigned e) const;

  // Structural comparison (not a monomial order); usable as a map key.
  auto operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }
  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  std::size_t hash() const;

 private:
  void recompute();
  std::array<std::uint16_t, kMonomialSlots> exps_;
  unsigned degree_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  // Grevlex on slots [0, split) compared first, then grevlex on the rest.
  static MonomialOrder elimination(std::size_t split) { return MonomialOrder(Kind::elimination, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }
  std::string name() const;

 private:
  MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}
  Kind kind_;
  std::size_t split_;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

class RingContext {
 public:
  static RingPtr make(std::vector<std::string> names, std::uint32_t modulus = PrimeField::kDefaultModulus);
  // Allows up to kMonomialSlots variables; for internal constructions.
  static RingPtr make_internal(std::vector<std::string> names, std::uint32_t modulus);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const PrimeField& field() const { return field_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool same_as(const RingContext& o) const { return field_ == o.field_ && names_ == o.names_; }

 private:
  RingContext(std::vector<std::string> names, PrimeField f) : names_(std::move(names)), field_(f) {}
  std::vector<std::string> names_;
  PrimeField field_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Residue coef;
  Monomial mono;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex())
      : ring_(std::move(ring)), order_(order) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, Monomial m, Residue coef = 1,
                             MonomialOrder order = MonomialOrder::grevlex());
  // Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);
  // Terms must already be strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    Polynomial p(std::move(ring), order);
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const PrimeField& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Residue leading_coefficient() const { return terms_.front().coef; }
  Residue constant_term() const;
  unsigned total_degree() const;
  // Lowest total degree among terms (the order of f at the origin).
  unsigned min_degree() const;
  // Common degree of all terms, if there is one. Zero is homogeneous of degree 0.
  std::optional<unsigned> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial with_order(MonomialOrder order) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Residue c) const;
  Polynomial mul_term(Residue c, const Monomial& m) const;
  Polynomial monic() const;
  // Exact division by a polynomial known to divide this one.
  Polynomial divide_exact(const Polynomial& d) const;
  // this - c * m * g, the basic reduction step.
  void sub_mul_term(Residue c, const Monomial& m, const Polynomial& g);

  bool operator==(const Polynomial& o) const;
  std::string to_string() const;

 private:
  void check(const Polynomial& o) const;
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
// Comma separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);
std::string monomial_to_string(const Monomial& m, const RingContext& ring);

// f(images[0], ..., images[n-1]) computed in the target ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target);

}  // namespace burch
