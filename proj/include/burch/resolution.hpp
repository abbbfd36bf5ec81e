#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burch/artinian.hpp"

namespace burch {

/// Finite-dimensional module over a QuotientAlgebra given by one action
/// matrix per variable.
class AlgebraModule {
 public:
  // Validates that the actions commute and kill every element of the ideal.
  AlgebraModule(AlgebraPtr R, std::size_t dim, std::vector<FieldMatrix> actions, std::string label = "");
  // Skips validation; for modules that are correct by construction.
  static AlgebraModule trusted(AlgebraPtr R, std::size_t dim, std::vector<FieldMatrix> actions,
                               std::string label = "");

  const AlgebraPtr& algebra() const { return R_; }
  const PrimeField& field() const { return R_->field(); }
  std::size_t dim() const { return dim_; }
  const FieldMatrix& action(std::size_t i) const { return actions_[i]; }
  const std::string& label() const { return label_; }

  // basis[j] * v for every basis element of the algebra.
  std::vector<Vector> basis_multiples(const Vector& v) const;
  Vector act(const AlgebraElement& a, const Vector& v) const;
  FieldMatrix act_matrix(const AlgebraElement& a) const;
  // Spanning set of m * M.
  std::vector<Vector> maximal_times() const;
  // Unit vectors forming a minimal generating set, chosen greedily.
  std::vector<Vector> minimal_generators() const;

 private:
  struct Unchecked {};
  AlgebraModule(Unchecked, AlgebraPtr R, std::size_t dim, std::vector<FieldMatrix> actions, std::string label)
      : R_(std::move(R)), dim_(dim), actions_(std::move(actions)), label_(std::move(label)) {}

  AlgebraPtr R_;
  std::size_t dim_;
  std::vector<FieldMatrix> actions_;
  std::string label_;
};

AlgebraModule free_module(const AlgebraPtr& R, std::size_t rank);
AlgebraModule residue_field(const AlgebraPtr& R);
// S/J as an R-module; J must contain the defining ideal of R.
AlgebraModule module_from_cyclic(const AlgebraPtr& R, const Ideal& J);
AlgebraModule direct_sum(const AlgebraModule& M, const AlgebraModule& N);

// A vector of R^b is stored as b consecutive blocks of algebra coordinates.
struct FreeVectorOps {
  const QuotientAlgebra& R;
  std::size_t rank;
  Vector times_variable(std::size_t i, const Vector& v) const;
  std::vector<Vector> basis_multiples(const Vector& v) const;
  AlgebraElement component(const Vector& v, std::size_t c) const;
  // m-adic order of the least-order component.
  std::size_t order(const Vector& v) const;
  std::string to_string(const Vector& v) const;
};

// Cokernel of the map R^(columns) -> R^rank whose columns are given.
AlgebraModule cokernel(const AlgebraPtr& R, std::size_t rank, const std::vector<Vector>& columns,
                       std::string label = "");

/// Minimal free resolution ... <- F_1 <- F_0 -> M with F_i = R^betti[i].
/// differential(i) for i >= 1 lists the columns of d_i : F_i -> F_(i-1).
class Resolution {
 public:
  const AlgebraPtr& algebra() const { return R_; }
  std::size_t length() const { return d_.size(); }
  const std::vector<std::size_t>& betti() const { return betti_; }
  // Images of the basis of F_0 in M.
  const std::vector<Vector>& augmentation() const { return eps_; }
  const std::vector<Vector>& differential(std::size_t i) const { return d_.at(i - 1); }
  // Spanning basis of ker d_(i-1) inside F_(i-1), i.e. the i-th syzygy (d_0 is the augmentation).
  const std::vector<Vector>& syzygy_space(std::size_t i) const { return syz_.at(i - 1); }
  // Ideal of R generated by the entries of d_i.
  AlgebraIdeal entry_ideal(std::size_t i) const;
  // The same ideal lifted to the polynomial ring (plus the defining ideal).
  Ideal entry_ideal_lifted(std::size_t i) const;
  std::string differential_string(std::size_t i) const;

  friend Resolution minimal_resolution(const AlgebraModule& M, std::size_t length);

 private:
  AlgebraPtr R_;
  std::vector<std::size_t> betti_;
  std::vector<Vector> eps_;
  std::vector<std::vector<Vector>> d_;
  std::vector<std::vector<Vector>> syz_;
};

// Computes d_1, ..., d_length (stops early once a syzygy vanishes).
Resolution minimal_resolution(const AlgebraModule& M, std::size_t length);

struct SyzygyModule {
  AlgebraModule module;
  std::size_t ambient_rank;
  std::vector<Vector> embedding;   // basis of the submodule of R^ambient_rank
  std::vector<Vector> generators;  // minimal generators (columns of the next differential)
};
// i-th syzygy as a submodule of R^betti[i-1]; i >= 1.
SyzygyModule syzygy(const AlgebraModule& M, std::size_t i);
SyzygyModule syzygy_of(const Resolution& res, std::size_t i);

struct SummandVerdict {
  bool summand = false;
  std::optional<Vector> witness;  // socle element of Z outside m*Z (ambient coordinates)
};
// Does k split off Z?  Decided by Soc Z not inside m*Z.
SummandVerdict k_summand_test(const SyzygyModule& Z);
// Is z in Soc Z but not in m*Z?
bool k_summand_witness(const SyzygyModule& Z, const Vector& z);

std::size_t koszul_h1(const QuotientAlgebra& R);
std::size_t tor(const AlgebraModule& M, const AlgebraModule& N, std::size_t i);
// dim Tor_i(M, N) for i = 0..upto from a resolution of M of length >= upto + 1.
std::vector<std::size_t> tor_sequence(const Resolution& res, const AlgebraModule& N, std::size_t upto);

struct MxModule {
  AlgebraModule module;
  std::size_t rows;                // beta_1 + beta_0
  std::vector<Vector> presentation;  // columns of [[d2, x], [0, -d1]]
  AlgebraIdeal entry_ideal;
  bool dimension_certificate;      // dim M(x) = dim M + dim Omega M
};
MxModule mx_construction(const AlgebraModule& M, const AlgebraElement& x);

}  // namespace burch
