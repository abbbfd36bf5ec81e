#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "burch/field.hpp"

namespace burch {

using Vector = std::vector<Residue>;

/// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  explicit FieldMatrix(PrimeField f, std::size_t rows = 0, std::size_t cols = 0)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FieldMatrix identity(PrimeField f, std::size_t n);
  static FieldMatrix from_rows(PrimeField f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static FieldMatrix from_columns(PrimeField f, std::size_t rows, const std::vector<Vector>& cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const std::vector<Residue>& data() const { return data_; }

  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  Vector apply(std::span<const Residue> v) const;
  bool is_zero() const;
  bool operator==(const FieldMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // Horizontal concatenation [this | o].
  FieldMatrix hconcat(const FieldMatrix& o) const;

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

// dst[c] += f * src[c] for c in [start, size).
void axpy(const PrimeField& F, std::span<Residue> dst, Residue f, std::span<const Residue> src,
          std::size_t start = 0);

struct Echelon {
  FieldMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(FieldMatrix m);
std::size_t rank(const FieldMatrix& m);
// Rank via column reduction (elimination on the transpose).
std::size_t rank_by_columns(const FieldMatrix& m);
FieldMatrix kernel_basis(const FieldMatrix& m);
bool column_space_membership(const FieldMatrix& m, std::span<const Residue> v);
std::optional<Vector> solve(const FieldMatrix& m, std::span<const Residue> b);

/// Incrementally built subspace of F_p^n kept in echelon form.  With
/// coordinate tracking on, every reduction also records how the vector is
/// expressed in the inserted basis.
class Subspace {
 public:
  Subspace(PrimeField f, std::size_t ambient, bool track_coordinates = false)
      : field_(f), ambient_(ambient), track_(track_coordinates) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  // Pivot positions of the echelon form, ascending. Reduced vectors vanish there.
  std::vector<std::size_t> pivots() const;

  // Adds v if independent; returns whether it was added.
  bool insert(std::span<const Residue> v);
  bool contains(std::span<const Residue> v) const;
  // Remainder of v modulo the subspace.
  Vector reduce(std::span<const Residue> v) const;
  // Coefficients of v in basis(); requires coordinate tracking.
  std::optional<Vector> coordinates(std::span<const Residue> v) const;

 private:
  struct Row {
    Vector v;
    Vector coords;
  };
  // Reduces v in place, accumulating coordinates when tracking. Returns the
  // first nonzero index or ambient_.
  std::size_t reduce_in_place(Vector& v, Vector* coords) const;

  PrimeField field_;
  std::size_t ambient_;
  bool track_;
  std::map<std::size_t, Row> rows_;  // keyed by pivot
  std::vector<Vector> basis_;
};

}  // namespace burch
