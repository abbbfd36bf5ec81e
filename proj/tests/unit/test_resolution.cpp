#include <gtest/gtest.h>

#include "burch/errors.hpp"
#include "burch/resolution.hpp"

using namespace burch;

namespace {

AlgebraPtr Q(std::vector<std::string> vars, const char* ideal) {
  auto R = RingContext::make(std::move(vars));
  return QuotientAlgebra::build(Ideal::parse(R, ideal));
}

AlgebraModule cyclic(const AlgebraPtr& R, const char* J) { return module_from_cyclic(R, Ideal::parse(R->ring(), J)); }

// d(v) for v in R^cols.size(), with d given by its columns in R^rows.
Vector apply_map(const QuotientAlgebra& R, std::size_t rows, const std::vector<Vector>& cols, const Vector& v) {
  FreeVectorOps out{R, rows}, in{R, cols.size()};
  Vector acc(rows * R.dim(), 0);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    AlgebraElement a = in.component(v, k);
    for (std::size_t r = 0; r < rows; ++r) {
      AlgebraElement p = R.multiply(a, out.component(cols[k], r));
      for (std::size_t j = 0; j < R.dim(); ++j) acc[r * R.dim() + j] = R.field().add(acc[r * R.dim() + j], p[j]);
    }
  }
  return acc;
}

void expect_resolution_invariants(const Resolution& res) {
  const QuotientAlgebra& R = *res.algebra();
  const auto& b = res.betti();
  for (std::size_t i = 1; i <= res.length(); ++i) {
    FreeVectorOps ops{R, b[i - 1]};
    for (const auto& col : res.differential(i))
      for (std::size_t r = 0; r < b[i - 1]; ++r) EXPECT_EQ(ops.component(col, r)[0], 0u) << "entry with a unit";
    // rank-nullity: dim F_(i-1) = dim ker + dim im, with im d_(i-1) = F_(i-1) / ker
    EXPECT_LE(res.syzygy_space(i).size(), b[i - 1] * R.dim());
    if (i + 1 <= res.length()) {
      FreeVectorOps next{R, b[i]};
      for (const auto& col : res.differential(i + 1)) {
        Vector z = apply_map(R, b[i - 1], res.differential(i), col);
        EXPECT_TRUE(std::all_of(z.begin(), z.end(), [](Residue x) { return x == 0; }));
      }
      // exactness: the submodule generated by the columns of d_(i+1) is all of ker d_i
      Subspace im(R.field(), b[i] * R.dim());
      for (const auto& col : res.differential(i + 1))
        for (const auto& w : next.basis_multiples(col)) im.insert(w);
      EXPECT_EQ(im.dim(), res.syzygy_space(i + 1).size());
    }
  }
}

}  // namespace

TEST(AlgebraModule, CyclicAndValidation) {
  auto X = Q({"x"}, "x^4");
  EXPECT_EQ(cyclic(X, "x").dim(), 1u);
  EXPECT_EQ(cyclic(X, "x^4").dim(), 4u);
  EXPECT_EQ(cyclic(X, "x^2").dim(), 2u);
  EXPECT_THROW(cyclic(X, "x^5"), PreconditionError);

  FieldMatrix N(X->field(), 2, 2);
  N.at(1, 0) = 1;
  EXPECT_NO_THROW(AlgebraModule(X, 2, {N}));
  FieldMatrix bad = FieldMatrix::identity(X->field(), 2);
  EXPECT_THROW(AlgebraModule(X, 2, {bad}), PreconditionError);
  auto A = Q({"x", "y"}, "x^2, y^2");
  FieldMatrix a(A->field(), 2, 2), b(A->field(), 2, 2);
  a.at(1, 0) = 1;
  b.at(0, 1) = 1;
  EXPECT_THROW(AlgebraModule(A, 2, {a, b}), PreconditionError);
}

TEST(AlgebraModule, CokernelOfVariable) {
  auto A = Q({"x", "y"}, "x^2, x*y, y^2");
  AlgebraModule C = cokernel(A, 1, {A->variable(0)});
  EXPECT_EQ(C.dim(), 2u);
  EXPECT_EQ(C.minimal_generators().size(), 1u);
  AlgebraModule S = direct_sum(C, residue_field(A));
  EXPECT_EQ(S.dim(), 3u);
  EXPECT_EQ(S.minimal_generators().size(), 2u);
}

TEST(Resolution, ExampleRingEight) {
  auto R = Q({"x", "y"}, "x^4, x^2*y^2, y^4");
  Resolution res = minimal_resolution(residue_field(R), 3);
  EXPECT_EQ(res.betti(), (std::vector<std::size_t>{1, 2, 4, 8}));
  expect_resolution_invariants(res);

  // The first generator of the second syzygy is the Koszul relation.
  EXPECT_EQ(res.differential_string(1), "[y, x]");
  FreeVectorOps ops{*R, 2};
  EXPECT_EQ(ops.to_string(res.differential(2)[0]), "(-x, y)");

  EXPECT_FALSE(k_summand_test(syzygy_of(res, 2)).summand);
  SyzygyModule Z3 = syzygy_of(res, 3);
  EXPECT_EQ(Z3.ambient_rank, 4u);
  EXPECT_EQ(Z3.generators.size(), 8u);
  auto v = k_summand_test(Z3);
  ASSERT_TRUE(v.summand);
  EXPECT_TRUE(k_summand_witness(Z3, *v.witness));
  Vector z(4 * R->dim(), 0);
  AlgebraElement s = R->parse("x^3*y");
  std::copy(s.begin(), s.end(), z.begin());
  EXPECT_TRUE(k_summand_witness(Z3, z));
  // x^3*y times every basis vector of R^4 lies in the syzygy: Soc R^4 is inside the third syzygy
  for (std::size_t c = 0; c < 4; ++c)
    for (const char* m : {"x^3*y", "x*y^3"}) {
      Vector w(4 * R->dim(), 0);
      AlgebraElement e = R->parse(m);
      std::copy(e.begin(), e.end(), w.begin() + c * R->dim());
      Subspace S(R->field(), w.size());
      for (const auto& b : Z3.embedding) S.insert(b);
      EXPECT_TRUE(S.contains(w));
    }
}

TEST(Resolution, HypersurfacePeriodicity) {
  auto X = Q({"x"}, "x^3");
  Resolution res = minimal_resolution(residue_field(X), 5);
  EXPECT_EQ(res.betti(), (std::vector<std::size_t>(6, 1)));
  EXPECT_EQ(res.differential_string(1), "[x]");
  EXPECT_EQ(res.differential_string(2), "[x^2]");
  EXPECT_EQ(res.differential_string(3), "[x]");
  EXPECT_EQ(res.differential_string(4), "[x^2]");
  expect_resolution_invariants(res);
}

TEST(Resolution, FreeModule) {
  auto A = Q({"x", "y"}, "x^2, y^3");
  Resolution res = minimal_resolution(free_module(A, 3), 4);
  EXPECT_EQ(res.betti(), (std::vector<std::size_t>{3, 0, 0, 0, 0}));
  EXPECT_EQ(syzygy(cyclic(A, "x^2, y^3"), 1).module.dim(), 0u);
}

TEST(Resolution, SyzygiesOfResidueField) {
  auto A = Q({"x", "y"}, "x^2, x*y, y^2");
  SyzygyModule Z1 = syzygy(residue_field(A), 1);
  EXPECT_EQ(Z1.module.dim(), 2u);
  EXPECT_EQ(Z1.module.minimal_generators().size(), 2u);
  EXPECT_TRUE(k_summand_test(syzygy(residue_field(A), 2)).summand);
  Resolution res = minimal_resolution(residue_field(A), 5);
  EXPECT_EQ(res.betti(), (std::vector<std::size_t>{1, 2, 4, 8, 16, 32}));
  expect_resolution_invariants(res);
}

TEST(Resolution, NonMonomialInvariants) {
  auto A = Q({"x", "y", "z"}, "x^2 - y*z, y^2 - x*z, z^2");
  for (const char* J : {"x, y, z", "x, y^2, z", "x^2 - y*z, y^2 - x*z, z^2, x*y"}) {
    Resolution res = minimal_resolution(cyclic(A, J), 4);
    expect_resolution_invariants(res);
    for (std::size_t i = 1; i <= res.length(); ++i)
      EXPECT_EQ(syzygy_of(res, i).module.minimal_generators().size(), res.betti()[i]);
  }
}

TEST(Koszul, FirstHomology) {
  EXPECT_EQ(koszul_h1(*Q({"x"}, "x^3")), 1u);
  EXPECT_EQ(koszul_h1(*Q({"x", "y"}, "x^2, x*y, y^2")), 3u);
  EXPECT_EQ(koszul_h1(*Q({"x", "y"}, "x, y")), 0u);
  for (const char* I : {"x^2, y^2", "x^4, x^2*y^2, y^4", "x^3, x*y, y^2", "y - x^2, x^5", "x^2 - y^3, x*y"}) {
    auto A = Q({"x", "y"}, I);
    std::size_t e = A->edim();
    std::size_t b2 = minimal_resolution(residue_field(A), 2).betti()[2];
    EXPECT_EQ(koszul_h1(*A), b2 - e * (e - 1) / 2) << I;
  }
  auto B = Q({"x", "y", "z"}, "x^2 - y*z, y^2 - x*z, z^2");
  std::size_t e = B->edim();
  EXPECT_EQ(koszul_h1(*B), minimal_resolution(residue_field(B), 2).betti()[2] - e * (e - 1) / 2);
}

TEST(Tor, Examples) {
  auto X = Q({"x"}, "x^3");
  EXPECT_EQ(tor(cyclic(X, "x"), cyclic(X, "x^2"), 1), 1u);
  auto A = Q({"x", "y"}, "x^2, x*y, y^3");
  auto k = residue_field(A);
  Resolution rk = minimal_resolution(k, 5);
  auto seq = tor_sequence(rk, k, 4);
  for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(seq[i], rk.betti()[i]);
  auto N = cyclic(A, "x, y^2");
  auto free_seq = tor_sequence(minimal_resolution(free_module(A, 1), 4), N, 3);
  EXPECT_EQ(free_seq[0], N.dim());
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(free_seq[i], 0u);
  auto M = cyclic(A, "x^2, y");
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(tor(M, N, i), tor(N, M, i)) << i;
}

TEST(MxConstruction, Examples) {
  auto X = Q({"x"}, "x^4");
  MxModule m = mx_construction(cyclic(X, "x^2"), X->parse("x"));
  FreeVectorOps ops{*X, m.rows};
  ASSERT_EQ(m.presentation.size(), 2u);
  EXPECT_EQ(ops.to_string(m.presentation[0]), "(x^2, 0)");
  EXPECT_EQ(ops.to_string(m.presentation[1]), "(x, -x^2)");
  ASSERT_EQ(m.entry_ideal.minimal_generators.size(), 1u);
  EXPECT_EQ(X->to_string(m.entry_ideal.minimal_generators[0]), "x");
  EXPECT_TRUE(m.dimension_certificate);
  EXPECT_THROW(mx_construction(free_module(X, 1), X->parse("x")), PreconditionError);
  EXPECT_THROW(mx_construction(cyclic(X, "x^2"), X->parse("1 + x")), PreconditionError);

  auto A = Q({"x", "y"}, "x^3, x*y^2, y^4");
  auto M = cyclic(A, "x^2, y");
  std::optional<AlgebraModule> sum;
  for (std::size_t i = 0; i < A->nvars(); ++i) {
    MxModule mi = mx_construction(M, A->variable(i));
    EXPECT_TRUE(mi.dimension_certificate);
    Subspace ent(A->field(), A->dim());
    for (const auto& v : mi.entry_ideal.basis) ent.insert(v);
    EXPECT_TRUE(ent.contains(A->variable(i)));
    sum = sum ? direct_sum(*sum, mi.module) : mi.module;
  }
  Resolution rs = minimal_resolution(*sum, 1);
  EXPECT_TRUE(ideal_equal(rs.entry_ideal_lifted(1), Ideal::maximal(A->ring())));
}
