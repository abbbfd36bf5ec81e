#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burch/groebner.hpp"
#include "burch/matrix.hpp"

namespace burch {

// Coordinates over the standard-monomial basis of a quotient algebra.
using AlgebraElement = Vector;

class QuotientAlgebra;
using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// R = S/I for an m-primary ideal I, presented by its standard monomials
/// (ascending grevlex, 1 first) and multiplication-by-variable matrices.
class QuotientAlgebra : public std::enable_shared_from_this<QuotientAlgebra> {
 public:
  static AlgebraPtr build(const Ideal& I);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const PrimeField& field() const { return ring()->field(); }
  std::size_t nvars() const { return ring()->nvars(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool is_field() const { return basis_.size() == 1; }

  // Column j holds x_i * basis[j].
  const FieldMatrix& mult(std::size_t i) const { return mult_[i]; }
  // Basis element j equals x_{via[j]} * basis[parent[j]] (unused for j = 0).
  std::size_t parent(std::size_t j) const { return parent_[j]; }
  std::size_t via(std::size_t j) const { return via_[j]; }

  AlgebraElement zero() const { return AlgebraElement(dim(), 0); }
  AlgebraElement one() const;
  AlgebraElement variable(std::size_t i) const;
  AlgebraElement element(const Polynomial& f) const;
  AlgebraElement parse(std::string_view text) const;
  Polynomial lift(const AlgebraElement& a) const;
  std::string to_string(const AlgebraElement& a) const { return lift(a).to_string(); }
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  // Matrix of multiplication by a.
  FieldMatrix mult_matrix(const AlgebraElement& a) const;
  // basis[j] * v for every j, computed along the parent chain.
  std::vector<AlgebraElement> basis_multiples(const AlgebraElement& v) const;

  const std::vector<std::size_t>& hilbert_function() const { return hilbert_; }
  std::size_t edim() const { return hilbert_.size() > 1 ? hilbert_[1] : 0; }
  std::size_t loewy_length() const { return hilbert_.size(); }
  // Basis of m^k (k = 0 gives the whole algebra).
  std::vector<AlgebraElement> maximal_power(std::size_t k) const;
  // Largest k with a in m^k; dim() for a = 0.
  std::size_t order(const AlgebraElement& a) const;
  // Indices of variables whose images form a basis of m/m^2.
  const std::vector<std::size_t>& minimal_variables() const { return min_vars_; }

  const std::vector<AlgebraElement>& socle() const { return socle_; }
  std::size_t type() const { return socle_.size(); }
  bool is_gorenstein() const { return socle_.size() == 1; }

 private:
  explicit QuotientAlgebra(Ideal I) : ideal_(std::move(I)) {}
  void populate();

  Ideal ideal_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> parent_, via_;
  std::vector<FieldMatrix> mult_;
  std::vector<std::size_t> hilbert_;
  std::vector<std::vector<AlgebraElement>> powers_;  // powers_[k] spans m^k
  std::vector<Subspace> power_spaces_;               // power_spaces_[k] is m^(k+1)
  std::vector<std::size_t> min_vars_;
  std::vector<AlgebraElement> socle_;
};

struct TypeAndGorenstein {
  std::size_t type;
  bool gorenstein;
};
TypeAndGorenstein type_and_gorenstein(const QuotientAlgebra& R);

// The ideal aR (or any subspace-generated ideal) with minimal generators over R.
struct AlgebraIdeal {
  std::vector<AlgebraElement> basis;
  std::vector<AlgebraElement> minimal_generators;
};
// Ideal of R generated by the given elements.
AlgebraIdeal ideal_generated(const QuotientAlgebra& R, const std::vector<AlgebraElement>& gens);
// Ideal of R whose underlying space is spanned by the given vectors (must be an ideal).
AlgebraIdeal ideal_from_space(const QuotientAlgebra& R, std::vector<AlgebraElement> space);
AlgebraIdeal annihilator(const QuotientAlgebra& R, const AlgebraElement& a);
bool same_space(const PrimeField& F, const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t ambient);

struct ExactPair {
  AlgebraElement a, b;
};
bool is_exact_pair(const QuotientAlgebra& R, const AlgebraElement& a, const AlgebraElement& b);
// Bounded search over variables, pairwise sums of variables and extra candidates.
std::vector<ExactPair> find_exact_pairs(const QuotientAlgebra& R, const std::vector<AlgebraElement>& extra = {});

struct FibreProduct {
  Ideal ideal;
  // One factor is the field, so the product is the other factor.
  bool trivial = false;
};
FibreProduct fibre_product(const QuotientAlgebra& S, const QuotientAlgebra& T);

// Ideal I + (lifts of the socle), presenting R / Soc R.
Ideal socle_quotient_ideal(const QuotientAlgebra& R);

}  // namespace burch
