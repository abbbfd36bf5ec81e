#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burch/groebner.hpp"

namespace burch {

/// Monomial ideal kept as its sorted antichain of minimal generators
/// (descending in lex, so in two variables the x-exponents decrease).
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);
  // Fails if some generator of the ideal is not a monomial.
  static std::optional<MonomialIdeal> from_ideal(const Ideal& a);
  static MonomialIdeal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& o) const;
  // Some pure power of every variable lies in the ideal.
  bool is_m_primary() const;
  Ideal to_ideal() const;
  std::string to_string() const;
  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal mono_colon_m(const MonomialIdeal& a);

struct MonomialBurchWitness {
  Monomial generator;
  std::size_t variable;
};

struct MonomialBurchVerdict {
  bool burch = false;
  std::optional<MonomialBurchWitness> witness;
};

// Looks for a minimal generator m and variable x_i | m with m*x_j/x_i in I for all j.
MonomialBurchVerdict burch_monomial(const MonomialIdeal& a);
bool witness_valid(const MonomialIdeal& a, const MonomialBurchWitness& w);

// Staircase of an m-primary ideal of k[x,y]: generators x^a_i y^b_i with a decreasing.
struct Staircase {
  std::vector<unsigned> a, b;
};
Staircase staircase(const MonomialIdeal& a);
bool burch_twovar(const MonomialIdeal& a);
// The bidiagonal mu x (mu-1) Hilbert-Burch matrix of an m-primary ideal of k[x,y].
PolyMatrix hilbert_burch_twovar(const MonomialIdeal& a);

inline constexpr unsigned kMaxEnumerationDegree = 7;
// Number of ideals the enumerator emits for a given bound.
std::uint64_t mprimary_count(unsigned max_socle_degree);
// Every m-primary monomial ideal I of k[x,y] with m^(d+1) in I, once each,
// in lex order of the column-height profile.
void for_each_mprimary(const RingPtr& ring, unsigned max_socle_degree,
                       const std::function<void(const MonomialIdeal&)>& visit);
std::vector<MonomialIdeal> enumerate_mprimary(const RingPtr& ring, unsigned max_socle_degree);

}  // namespace burch
