#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "burch/poly.hpp"

namespace burch {

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].leading_monomial().is_one(); }
  bool is_zero() const { return elements_.empty(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool reduces_to_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }
  // Is m divisible by some leading monomial?
  bool in_leading_ideal(const Monomial& m) const;
  bool operator==(const GroebnerBasis& o) const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

// Buchberger's algorithm with the Gebauer-Moeller pair criteria.
GroebnerBasis groebner(const RingPtr& ring, const std::vector<Polynomial>& gens,
                       MonomialOrder order = MonomialOrder::grevlex());
// Full reduction of f by an arbitrary list (used internally and in tests).
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors);

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal maximal(RingPtr ring);
  static Ideal parse(const RingPtr& ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  // Cached reduced grevlex basis; safe to call from several threads.
  const GroebnerBasis& gb() const;
  bool is_unit() const { return gb().is_unit(); }
  // All generators have zero constant term.
  bool in_maximal() const;
  bool is_monomial() const;
  bool is_homogeneous() const;

  bool contains(const Polynomial& f) const { return gb().reduces_to_zero(f.with_order(gb().order())); }
  bool contains(const Ideal& J) const;
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned k);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
Ideal ideal_colon(const Ideal& a, const Ideal& b);
// Generators of the reduced basis as an ideal (a canonical generating set).
Ideal trim(const Ideal& a);

bool is_zero_dimensional(const Ideal& a);
bool is_m_primary(const Ideal& a);
// Monomials outside the leading ideal, ascending in grevlex; requires a zero-dimensional ideal.
std::vector<Monomial> standard_monomials(const Ideal& a);
std::size_t quotient_length(const Ideal& a);
// dim of I / mI for an m-primary or homogeneous ideal.
std::size_t minimal_generator_count(const Ideal& a);

/// Matrix with polynomial entries, row-major.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

struct SyzygyMatrix {
  PolyMatrix matrix;
  bool minimized = false;
};

// First syzygies of the generator list of a homogeneous ideal with minimal
// generators; columns are minimal homogeneous generators of the syzygy module.
SyzygyMatrix syzygy_matrix(const Ideal& a);
Ideal entry_ideal(const PolyMatrix& m);

}  // namespace burch
