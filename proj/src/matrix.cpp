#include "burch/matrix.hpp"

#include <stdexcept>

namespace burch {

FieldMatrix FieldMatrix::identity(PrimeField f, std::size_t n) {
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(PrimeField f,
                                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  FieldMatrix m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    std::size_t j = 0;
    for (auto v : row) m.at(i, j++) = f.from_int(v);
    ++i;
  }
  return m;
}

FieldMatrix FieldMatrix::from_columns(PrimeField f, std::size_t rows, const std::vector<Vector>& cols) {
  FieldMatrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vector FieldMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  FieldMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Residue a = (*this)(i, k);
      if (a) axpy(field_, out.row(i), a, o.row(k));
    }
  return out;
}

Vector FieldMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>(r[j]) * v[j];
      if ((j & 0xff) == 0xff) acc %= field_.modulus();
    }
    out[i] = static_cast<Residue>(acc % field_.modulus());
  }
  return out;
}

bool FieldMatrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

FieldMatrix FieldMatrix::hconcat(const FieldMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hconcat row mismatch");
  FieldMatrix m(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o(i, j);
  }
  return m;
}

void axpy(const PrimeField& F, std::span<Residue> dst, Residue f, std::span<const Residue> src,
          std::size_t start) {
  const std::size_t n = dst.size();
  for (std::size_t c = start; c < n; ++c) {
    Residue s = src[c];
    if (s) dst[c] = F.reduce(dst[c] + f * s);
  }
}

Echelon rref(FieldMatrix m) {
  const PrimeField F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Residue inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Residue f = m(i, c);
      if (f) axpy(F, m.row(i), F.neg(f), m.row(r), c);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

namespace {

// Forward elimination only; returns the rank.
std::size_t echelon_rank(FieldMatrix m) {
  const PrimeField F = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Residue inv = F.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Residue f = m(i, c);
      if (f) axpy(F, m.row(i), F.neg(F.mul(f, inv)), m.row(r), c);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) { return echelon_rank(m); }

std::size_t rank_by_columns(const FieldMatrix& m) { return echelon_rank(m.transpose()); }

FieldMatrix kernel_basis(const FieldMatrix& m) {
  const PrimeField F = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::size_t nfree = m.cols() - e.pivots.size();
  FieldMatrix k(F, m.cols(), nfree);
  std::size_t col = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k.at(f, col) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k.at(e.pivots[i], col) = F.neg(e.reduced(i, f));
    ++col;
  }
  return k;
}

bool column_space_membership(const FieldMatrix& m, std::span<const Residue> v) {
  return solve(m, v).has_value();
}

std::optional<Vector> solve(const FieldMatrix& m, std::span<const Residue> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  FieldMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

std::size_t Subspace::reduce_in_place(Vector& v, Vector* coords) const {
  for (const auto& [p, row] : rows_) {
    Residue f = v[p];
    if (!f) continue;
    Residue nf = field_.neg(f);
    axpy(field_, v, nf, row.v, p);
    if (coords) {
      coords->resize(std::max(coords->size(), row.coords.size()), 0);
      axpy(field_, std::span<Residue>(coords->data(), row.coords.size()), nf, row.coords);
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return i;
  return ambient_;
}

bool Subspace::insert(std::span<const Residue> v) {
  if (v.size() != ambient_) throw std::invalid_argument("subspace vector length mismatch");
  Vector w(v.begin(), v.end());
  Vector coords;
  std::size_t p = reduce_in_place(w, track_ ? &coords : nullptr);
  if (p == ambient_) return false;
  Residue inv = field_.inv(w[p]);
  for (std::size_t j = p; j < ambient_; ++j) w[j] = field_.mul(w[j], inv);
  if (track_) {
    // Before scaling, w = v + sum(coords_i * basis_i).
    coords.resize(basis_.size() + 1, 0);
    for (auto& c : coords) c = field_.mul(c, inv);
    coords[basis_.size()] = inv;
  }
  basis_.emplace_back(v.begin(), v.end());
  rows_.emplace(p, Row{std::move(w), std::move(coords)});
  return true;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& kv : rows_) out.push_back(kv.first);
  return out;
}

Vector Subspace::reduce(std::span<const Residue> v) const {
  Vector w(v.begin(), v.end());
  reduce_in_place(w, nullptr);
  return w;
}

bool Subspace::contains(std::span<const Residue> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace vector length mismatch");
  Vector w(v.begin(), v.end());
  return reduce_in_place(w, nullptr) == ambient_;
}

std::optional<Vector> Subspace::coordinates(std::span<const Residue> v) const {
  if (!track_) throw std::logic_error("subspace built without coordinate tracking");
  Vector w(v.begin(), v.end());
  Vector coords;
  if (reduce_in_place(w, &coords) != ambient_) return std::nullopt;
  // v = sum over rows of f_row * row = sum f_row * coords(row); reduction
  // subtracted those, so coords holds the negation.
  coords.resize(basis_.size(), 0);
  for (auto& c : coords) c = field_.neg(c);
  return coords;
}

}  // namespace burch
