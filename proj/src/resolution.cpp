#include "burch/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "burch/errors.hpp"

namespace burch {

namespace {

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n, 0);
  v[k] = 1;
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; });
}

}  // namespace

AlgebraModule::AlgebraModule(AlgebraPtr R, std::size_t dim, std::vector<FieldMatrix> actions, std::string label)
    : AlgebraModule(Unchecked{}, std::move(R), dim, std::move(actions), std::move(label)) {
  if (actions_.size() != R_->nvars())
    throw PreconditionError("module needs one action matrix per variable");
  for (const auto& A : actions_)
    if (A.rows() != dim_ || A.cols() != dim_) throw PreconditionError("action matrix has the wrong shape");
  for (std::size_t i = 0; i < actions_.size(); ++i)
    for (std::size_t j = i + 1; j < actions_.size(); ++j)
      if (!(actions_[i] * actions_[j] == actions_[j] * actions_[i]))
        throw PreconditionError("action matrices do not commute");
  const PrimeField& F = field();
  for (const auto& g : R_->ideal().gb().elements())
    for (std::size_t k = 0; k < dim_; ++k) {
      Vector acc(dim_, 0);
      for (const auto& t : g.terms()) {
        Vector v = unit_vector(dim_, k);
        for (std::size_t i = 0; i < R_->nvars(); ++i)
          for (unsigned e = 0; e < t.mono[i]; ++e) v = actions_[i].apply(v);
        axpy(F, acc, t.coef, v);
      }
      if (!is_zero_vector(acc)) throw PreconditionError("relation " + g.to_string() + " does not act as zero");
    }
}

AlgebraModule AlgebraModule::trusted(AlgebraPtr R, std::size_t dim, std::vector<FieldMatrix> actions,
                                     std::string label) {
  return AlgebraModule(Unchecked{}, std::move(R), dim, std::move(actions), std::move(label));
}

std::vector<Vector> AlgebraModule::basis_multiples(const Vector& v) const {
  std::vector<Vector> w(R_->dim());
  w[0] = v;
  for (std::size_t j = 1; j < w.size(); ++j) w[j] = actions_[R_->via(j)].apply(w[R_->parent(j)]);
  return w;
}

Vector AlgebraModule::act(const AlgebraElement& a, const Vector& v) const {
  std::vector<Vector> w = basis_multiples(v);
  Vector out(dim_, 0);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (a[j]) axpy(field(), out, a[j], w[j]);
  return out;
}

FieldMatrix AlgebraModule::act_matrix(const AlgebraElement& a) const {
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < dim_; ++k) cols.push_back(act(a, unit_vector(dim_, k)));
  return FieldMatrix::from_columns(field(), dim_, cols);
}

std::vector<Vector> AlgebraModule::maximal_times() const {
  std::vector<Vector> out;
  for (const auto& A : actions_)
    for (std::size_t k = 0; k < dim_; ++k) out.push_back(A.column(k));
  return out;
}

std::vector<Vector> AlgebraModule::minimal_generators() const {
  Subspace S(field(), dim_);
  for (const auto& v : maximal_times()) S.insert(v);
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < dim_; ++k) {
    Vector e = unit_vector(dim_, k);
    if (S.insert(e)) gens.push_back(e);
  }
  return gens;
}

AlgebraModule free_module(const AlgebraPtr& R, std::size_t rank) {
  const std::size_t n = R->dim();
  std::vector<FieldMatrix> acts;
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    FieldMatrix A(R->field(), rank * n, rank * n);
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) A.at(b * n + r, b * n + c) = R->mult(i)(r, c);
    acts.push_back(std::move(A));
  }
  return AlgebraModule::trusted(R, rank * n, std::move(acts), "R^" + std::to_string(rank));
}

AlgebraModule residue_field(const AlgebraPtr& R) {
  std::vector<FieldMatrix> acts(R->nvars(), FieldMatrix(R->field(), 1, 1));
  return AlgebraModule::trusted(R, 1, std::move(acts), "k");
}

AlgebraModule module_from_cyclic(const AlgebraPtr& R, const Ideal& J) {
  require_same_ring(R->ring(), J.ring());
  if (!J.contains(R->ideal())) throw PreconditionError("ideal " + J.to_string() + " does not contain the defining ideal");
  if (J.is_unit()) return AlgebraModule::trusted(R, 0, std::vector<FieldMatrix>(R->nvars(), FieldMatrix(R->field())));
  AlgebraPtr Q = QuotientAlgebra::build(J);
  std::vector<FieldMatrix> acts;
  for (std::size_t i = 0; i < R->nvars(); ++i) acts.push_back(Q->mult(i));
  return AlgebraModule::trusted(R, Q->dim(), std::move(acts), "R/" + J.to_string());
}

AlgebraModule direct_sum(const AlgebraModule& M, const AlgebraModule& N) {
  if (M.algebra() != N.algebra()) throw PreconditionError("direct sum of modules over different algebras");
  const std::size_t a = M.dim(), b = N.dim();
  std::vector<FieldMatrix> acts;
  for (std::size_t i = 0; i < M.algebra()->nvars(); ++i) {
    FieldMatrix A(M.field(), a + b, a + b);
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < a; ++c) A.at(r, c) = M.action(i)(r, c);
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t c = 0; c < b; ++c) A.at(a + r, a + c) = N.action(i)(r, c);
    acts.push_back(std::move(A));
  }
  return AlgebraModule::trusted(M.algebra(), a + b, std::move(acts), M.label() + " + " + N.label());
}

Vector FreeVectorOps::times_variable(std::size_t i, const Vector& v) const {
  const std::size_t n = R.dim();
  Vector out(v.size(), 0);
  const FieldMatrix& A = R.mult(i);
  for (std::size_t b = 0; b < rank; ++b) {
    Vector blk = A.apply(std::span<const Residue>(v.data() + b * n, n));
    std::copy(blk.begin(), blk.end(), out.begin() + b * n);
  }
  return out;
}

std::vector<Vector> FreeVectorOps::basis_multiples(const Vector& v) const {
  std::vector<Vector> w(R.dim());
  w[0] = v;
  for (std::size_t j = 1; j < w.size(); ++j) w[j] = times_variable(R.via(j), w[R.parent(j)]);
  return w;
}

AlgebraElement FreeVectorOps::component(const Vector& v, std::size_t c) const {
  const std::size_t n = R.dim();
  return AlgebraElement(v.begin() + c * n, v.begin() + (c + 1) * n);
}

std::size_t FreeVectorOps::order(const Vector& v) const {
  std::size_t best = R.dim();
  for (std::size_t c = 0; c < rank; ++c) best = std::min(best, R.order(component(v, c)));
  return best;
}

std::string FreeVectorOps::to_string(const Vector& v) const {
  std::string s = "(";
  for (std::size_t c = 0; c < rank; ++c) {
    if (c) s += ", ";
    s += R.to_string(component(v, c));
  }
  return s + ")";
}

AlgebraModule cokernel(const AlgebraPtr& R, std::size_t rank, const std::vector<Vector>& columns, std::string label) {
  FreeVectorOps ops{*R, rank};
  const std::size_t N = rank * R->dim();
  Subspace W(R->field(), N);
  for (const auto& c : columns) {
    if (c.size() != N) throw PreconditionError("presentation column has the wrong length");
    for (const auto& w : ops.basis_multiples(c)) W.insert(w);
  }
  std::vector<std::size_t> piv = W.pivots(), keep;
  for (std::size_t k = 0, p = 0; k < N; ++k) {
    if (p < piv.size() && piv[p] == k) {
      ++p;
      continue;
    }
    keep.push_back(k);
  }
  std::vector<FieldMatrix> acts;
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    FieldMatrix A(R->field(), keep.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
      Vector r = W.reduce(ops.times_variable(i, unit_vector(N, keep[c])));
      for (std::size_t q = 0; q < keep.size(); ++q) A.at(q, c) = r[keep[q]];
    }
    acts.push_back(std::move(A));
  }
  return AlgebraModule::trusted(R, keep.size(), std::move(acts), std::move(label));
}

namespace {

// Minimal generators of the submodule of R^rank with the given linear basis,
// preferring vectors of low m-adic order and then earlier vectors.
std::vector<Vector> minimal_submodule_generators(const QuotientAlgebra& R, std::size_t rank,
                                                 const std::vector<Vector>& basis) {
  FreeVectorOps ops{R, rank};
  Subspace mK(R.field(), rank * R.dim());
  for (const auto& v : basis)
    for (std::size_t i = 0; i < R.nvars(); ++i) mK.insert(ops.times_variable(i, v));
  std::vector<std::size_t> idx(basis.size()), ord(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) ord[k] = ops.order(basis[k]);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ord[a] < ord[b]; });
  std::vector<Vector> gens;
  for (std::size_t k : idx)
    if (mK.insert(basis[k])) gens.push_back(basis[k]);
  return gens;
}

// Matrix whose column k*n + j is basis[j] * image(k).
FieldMatrix linear_map(const QuotientAlgebra& R, std::size_t rows, const std::vector<std::vector<Vector>>& multiples) {
  std::vector<Vector> cols;
  for (const auto& m : multiples)
    for (const auto& v : m) cols.push_back(v);
  return FieldMatrix::from_columns(R.field(), rows, cols);
}

}  // namespace

Resolution minimal_resolution(const AlgebraModule& M, std::size_t length) {
  if (length < 1) throw PreconditionError("resolution length must be at least 1");
  const QuotientAlgebra& R = *M.algebra();
  const std::size_t n = R.dim();
  Resolution res;
  res.R_ = M.algebra();
  res.eps_ = M.minimal_generators();
  res.betti_.push_back(res.eps_.size());
  std::vector<std::vector<Vector>> mult;
  for (const auto& g : res.eps_) mult.push_back(M.basis_multiples(g));
  FieldMatrix A = linear_map(R, M.dim(), mult);
  bool done = false;
  for (std::size_t i = 1; i <= length; ++i) {
    const std::size_t prev = res.betti_.back();
    if (done || prev == 0) {
      done = true;
      res.syz_.emplace_back();
      res.d_.emplace_back();
      res.betti_.push_back(0);
      continue;
    }
    FieldMatrix K = kernel_basis(A);
    std::vector<Vector> ker;
    for (std::size_t c = 0; c < K.cols(); ++c) ker.push_back(K.column(c));
    std::vector<Vector> gens = minimal_submodule_generators(R, prev, ker);
    res.syz_.push_back(std::move(ker));
    res.betti_.push_back(gens.size());
    if (i < length && !gens.empty()) {
      FreeVectorOps ops{R, prev};
      mult.clear();
      for (const auto& g : gens) mult.push_back(ops.basis_multiples(g));
      A = linear_map(R, prev * n, mult);
    }
    res.d_.push_back(std::move(gens));
  }
  return res;
}

AlgebraIdeal Resolution::entry_ideal(std::size_t i) const {
  FreeVectorOps ops{*R_, betti_.at(i - 1)};
  std::vector<AlgebraElement> entries;
  for (const auto& col : differential(i))
    for (std::size_t c = 0; c < ops.rank; ++c) {
      AlgebraElement e = ops.component(col, c);
      if (!is_zero_vector(e)) entries.push_back(std::move(e));
    }
  return ideal_generated(*R_, entries);
}

Ideal Resolution::entry_ideal_lifted(std::size_t i) const {
  std::vector<Polynomial> gens = R_->ideal().generators();
  for (const auto& g : entry_ideal(i).minimal_generators) gens.push_back(R_->lift(g));
  return Ideal(R_->ring(), std::move(gens));
}

std::string Resolution::differential_string(std::size_t i) const {
  const auto& cols = differential(i);
  FreeVectorOps ops{*R_, betti_.at(i - 1)};
  std::string s = "[";
  for (std::size_t r = 0; r < ops.rank; ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) s += ", ";
      s += R_->to_string(ops.component(cols[c], r));
    }
  }
  return s + "]";
}

SyzygyModule syzygy_of(const Resolution& res, std::size_t i) {
  if (i < 1 || i > res.length()) throw PreconditionError("syzygy index out of range");
  const AlgebraPtr& R = res.algebra();
  const std::size_t rank = res.betti()[i - 1];
  FreeVectorOps ops{*R, rank};
  const auto& Z = res.syzygy_space(i);
  Subspace S(R->field(), rank * R->dim(), true);
  for (const auto& z : Z) S.insert(z);
  std::vector<FieldMatrix> acts;
  for (std::size_t v = 0; v < R->nvars(); ++v) {
    std::vector<Vector> cols;
    for (const auto& z : Z) {
      auto c = S.coordinates(ops.times_variable(v, z));
      if (!c) throw ConsistencyError("syzygy space is not a submodule");
      cols.push_back(*c);
    }
    acts.push_back(FieldMatrix::from_columns(R->field(), Z.size(), cols));
  }
  return SyzygyModule{AlgebraModule::trusted(R, Z.size(), std::move(acts), "syzygy " + std::to_string(i)), rank, Z,
                      res.differential(i)};
}

SyzygyModule syzygy(const AlgebraModule& M, std::size_t i) { return syzygy_of(minimal_resolution(M, i), i); }

namespace {

Subspace maximal_times_span(const SyzygyModule& Z) {
  const QuotientAlgebra& R = *Z.module.algebra();
  FreeVectorOps ops{R, Z.ambient_rank};
  Subspace mZ(R.field(), Z.ambient_rank * R.dim());
  for (const auto& z : Z.embedding)
    for (std::size_t i = 0; i < R.nvars(); ++i) mZ.insert(ops.times_variable(i, z));
  return mZ;
}

}  // namespace

SummandVerdict k_summand_test(const SyzygyModule& Z) {
  const AlgebraModule& M = Z.module;
  const QuotientAlgebra& R = *M.algebra();
  if (M.dim() == 0) return {};
  FieldMatrix stacked(R.field(), R.nvars() * M.dim(), M.dim());
  for (std::size_t i = 0; i < R.nvars(); ++i)
    for (std::size_t r = 0; r < M.dim(); ++r)
      for (std::size_t c = 0; c < M.dim(); ++c) stacked.at(i * M.dim() + r, c) = M.action(i)(r, c);
  FieldMatrix K = kernel_basis(stacked);
  Subspace mZ = maximal_times_span(Z);
  const std::size_t N = Z.ambient_rank * R.dim();
  for (std::size_t c = 0; c < K.cols(); ++c) {
    Vector z(N, 0);
    for (std::size_t k = 0; k < M.dim(); ++k)
      if (K(k, c)) axpy(R.field(), z, K(k, c), Z.embedding[k]);
    if (!mZ.contains(z)) return {true, z};
  }
  return {};
}

bool k_summand_witness(const SyzygyModule& Z, const Vector& z) {
  const QuotientAlgebra& R = *Z.module.algebra();
  FreeVectorOps ops{R, Z.ambient_rank};
  if (z.size() != Z.ambient_rank * R.dim()) return false;
  Subspace S(R.field(), z.size());
  for (const auto& e : Z.embedding) S.insert(e);
  if (!S.contains(z)) return false;
  for (std::size_t i = 0; i < R.nvars(); ++i)
    if (!is_zero_vector(ops.times_variable(i, z))) return false;
  return !maximal_times_span(Z).contains(z);
}

std::size_t koszul_h1(const QuotientAlgebra& R) {
  const auto& vars = R.minimal_variables();
  const std::size_t e = vars.size(), n = R.dim();
  if (e == 0) return 0;
  std::vector<Vector> c1;
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t j = 0; j < n; ++j) c1.push_back(R.mult(vars[a]).column(j));
  std::size_t ker1 = e * n - rank(FieldMatrix::from_columns(R.field(), n, c1));
  std::vector<Vector> c2;
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = a + 1; b < e; ++b)
      for (std::size_t j = 0; j < n; ++j) {
        Vector v(e * n, 0);
        Vector xb = R.mult(vars[b]).column(j), xa = R.mult(vars[a]).column(j);
        for (std::size_t r = 0; r < n; ++r) {
          v[a * n + r] = xb[r];
          v[b * n + r] = R.field().neg(xa[r]);
        }
        c2.push_back(std::move(v));
      }
  std::size_t rank2 = c2.empty() ? 0 : rank(FieldMatrix::from_columns(R.field(), e * n, c2));
  return ker1 - rank2;
}

std::vector<std::size_t> tor_sequence(const Resolution& res, const AlgebraModule& N, std::size_t upto) {
  if (res.length() < upto + 1) throw PreconditionError("resolution too short for the requested Tor range");
  const QuotientAlgebra& R = *res.algebra();
  const std::size_t dn = N.dim(), n = R.dim();
  // Matrices of the basis elements of R acting on N.
  std::vector<FieldMatrix> basis_act;
  basis_act.push_back(FieldMatrix::identity(R.field(), dn));
  for (std::size_t j = 1; j < n; ++j) basis_act.push_back(N.action(R.via(j)) * basis_act[R.parent(j)]);
  auto tensored_rank = [&](std::size_t i) -> std::size_t {
    const auto& cols = res.differential(i);
    const std::size_t rows_b = res.betti()[i - 1];
    if (cols.empty() || rows_b == 0 || dn == 0) return 0;
    FieldMatrix T(R.field(), rows_b * dn, cols.size() * dn);
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (std::size_t c = 0; c < rows_b; ++c)
        for (std::size_t j = 0; j < n; ++j) {
          Residue a = cols[k][c * n + j];
          if (!a) continue;
          const FieldMatrix& B = basis_act[j];
          for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t s = 0; s < dn; ++s)
              if (B(r, s)) {
                Residue& t = T.at(c * dn + r, k * dn + s);
                t = R.field().add(t, R.field().mul(a, B(r, s)));
              }
        }
    return rank(T);
  };
  std::vector<std::size_t> ranks(upto + 2, 0);
  for (std::size_t i = 1; i <= upto + 1; ++i) ranks[i] = tensored_rank(i);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= upto; ++i) out.push_back(res.betti()[i] * dn - ranks[i] - ranks[i + 1]);
  return out;
}

std::size_t tor(const AlgebraModule& M, const AlgebraModule& N, std::size_t i) {
  return tor_sequence(minimal_resolution(M, i + 1), N, i)[i];
}

MxModule mx_construction(const AlgebraModule& M, const AlgebraElement& x) {
  const AlgebraPtr& Rp = M.algebra();
  const QuotientAlgebra& R = *Rp;
  if (x.size() != R.dim() || x[0] != 0) throw PreconditionError("element must lie in the maximal ideal");
  Resolution res = minimal_resolution(M, 2);
  const std::size_t b0 = res.betti()[0], b1 = res.betti()[1], n = R.dim();
  if (b1 == 0) throw PreconditionError("module is free");
  const std::size_t rows = b1 + b0;
  std::vector<Vector> cols;
  for (const auto& c : res.differential(2)) {
    Vector v(rows * n, 0);
    std::copy(c.begin(), c.end(), v.begin());
    cols.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < b1; ++k) {
    Vector v(rows * n, 0);
    std::copy(x.begin(), x.end(), v.begin() + k * n);
    const Vector& d1 = res.differential(1)[k];
    for (std::size_t r = 0; r < b0 * n; ++r) v[b1 * n + r] = R.field().neg(d1[r]);
    cols.push_back(std::move(v));
  }
  AlgebraModule Mx = cokernel(Rp, rows, cols, M.label() + "(" + R.to_string(x) + ")");
  FreeVectorOps ops{R, rows};
  std::vector<AlgebraElement> entries;
  for (const auto& c : cols)
    for (std::size_t r = 0; r < rows; ++r) {
      AlgebraElement e = ops.component(c, r);
      if (!is_zero_vector(e)) entries.push_back(std::move(e));
    }
  bool cert = Mx.dim() == M.dim() + res.syzygy_space(1).size();
  return MxModule{std::move(Mx), rows, std::move(cols), ideal_generated(R, entries), cert};
}

}  // namespace burch
