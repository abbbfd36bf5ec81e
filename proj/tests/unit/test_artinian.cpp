#include <random>

#include <gtest/gtest.h>

#include "burch/artinian.hpp"
#include "burch/errors.hpp"

using namespace burch;

namespace {

AlgebraPtr Q(std::vector<std::string> vars, const char* ideal) {
  auto R = RingContext::make(std::move(vars));
  return QuotientAlgebra::build(Ideal::parse(R, ideal));
}

std::vector<std::string> strings(const QuotientAlgebra& R, const std::vector<AlgebraElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(R.to_string(e));
  return out;
}

void expect_commuting(const QuotientAlgebra& R) {
  for (std::size_t i = 0; i < R.nvars(); ++i)
    for (std::size_t j = 0; j < R.nvars(); ++j) EXPECT_EQ(R.mult(i) * R.mult(j), R.mult(j) * R.mult(i));
}

}  // namespace

TEST(QuotientAlgebra, BuildExamples) {
  auto A = Q({"x", "y"}, "x^2, x*y, y^2");
  EXPECT_EQ(A->dim(), 3u);
  EXPECT_EQ(strings(*A, {A->one(), A->variable(0), A->variable(1)}), (std::vector<std::string>{"1", "x", "y"}));
  EXPECT_EQ(A->hilbert_function(), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(same_space(A->field(), A->socle(), {A->variable(0), A->variable(1)}, A->dim()));
  EXPECT_EQ(A->type(), 2u);

  auto B = Q({"x", "y"}, "x^4, x^2*y^2, y^4");
  EXPECT_EQ(B->dim(), 12u);
  EXPECT_EQ(B->hilbert_function(), (std::vector<std::size_t>{1, 2, 3, 4, 2}));
  EXPECT_EQ(B->type(), 2u);
  EXPECT_TRUE(same_space(B->field(), B->socle(), {B->parse("x^3*y"), B->parse("x*y^3")}, B->dim()));
  expect_commuting(*B);

  auto C = Q({"x", "y"}, "x, y");
  EXPECT_TRUE(C->is_field());
  EXPECT_EQ(C->edim(), 0u);
  EXPECT_EQ(C->hilbert_function(), (std::vector<std::size_t>{1}));

  auto R = RingContext::make({"x", "y"});
  EXPECT_THROW(QuotientAlgebra::build(Ideal::parse(R, "x^2")), PreconditionError);
  EXPECT_THROW(QuotientAlgebra::build(Ideal::parse(R, "x - x^2, y")), PreconditionError);
  EXPECT_THROW(QuotientAlgebra::build(Ideal::unit(R)), PreconditionError);
}

TEST(QuotientAlgebra, SocleAndType) {
  auto A = Q({"x", "y"}, "x^2, x*y, y^2");
  EXPECT_TRUE(same_space(A->field(), A->socle(), {A->variable(0), A->variable(1)}, A->dim()));
  auto X = Q({"x"}, "x^3");
  ASSERT_EQ(X->socle().size(), 1u);
  EXPECT_EQ(X->to_string(X->socle()[0]), "x^2");
  EXPECT_EQ(X->hilbert_function(), (std::vector<std::size_t>{1, 1, 1}));
  auto G = type_and_gorenstein(*Q({"x", "y"}, "x^2, y^2"));
  EXPECT_EQ(G.type, 1u);
  EXPECT_TRUE(G.gorenstein);
  auto N = type_and_gorenstein(*A);
  EXPECT_EQ(N.type, 2u);
  EXPECT_FALSE(N.gorenstein);
  for (unsigned r = 1; r <= 6; ++r) {
    auto P = QuotientAlgebra::build(Ideal::parse(RingContext::make({"x"}), ("x^" + std::to_string(r)).c_str()));
    EXPECT_TRUE(P->is_gorenstein());
  }
}

TEST(QuotientAlgebra, ArithmeticMatchesPolynomials) {
  auto A = Q({"x", "y", "z"}, "x^3 - y*z, y^2 - x*z, z^2, x*y*z");
  expect_commuting(*A);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Residue> coef(0, A->field().modulus() - 1);
  auto random_element = [&] {
    AlgebraElement v = A->zero();
    for (auto& c : v) c = coef(rng);
    return v;
  };
  for (int t = 0; t < 20; ++t) {
    AlgebraElement a = random_element(), b = random_element();
    EXPECT_EQ(A->multiply(a, b), A->element(A->lift(a) * A->lift(b)));
    EXPECT_EQ(A->multiply(a, b), A->multiply(b, a));
    EXPECT_EQ(A->mult_matrix(a).apply(b), A->multiply(a, b));
  }
  std::size_t total = 0;
  for (auto h : A->hilbert_function()) total += h;
  EXPECT_EQ(total, A->dim());
  EXPECT_EQ(A->edim(), A->hilbert_function()[1]);
  for (const auto& s : A->socle())
    for (std::size_t i = 0; i < A->nvars(); ++i) EXPECT_EQ(A->multiply(A->variable(i), s), A->zero());
}

TEST(QuotientAlgebra, NonHomogeneousFiltration) {
  // x^2 - y^3: y is not in m^2 but x^2 = y^3 lies in m^3.
  auto A = Q({"x", "y"}, "x^2 - y^3, x*y");
  EXPECT_EQ(A->order(A->parse("x^2")), 3u);
  EXPECT_EQ(A->order(A->parse("y")), 1u);
  EXPECT_EQ(A->order(A->one()), 0u);
  EXPECT_EQ(A->edim(), 2u);
  EXPECT_EQ(A->minimal_variables(), (std::vector<std::size_t>{0, 1}));
  auto B = Q({"x", "y"}, "y - x^2, x^5");
  EXPECT_EQ(B->edim(), 1u);
  EXPECT_EQ(B->minimal_variables(), (std::vector<std::size_t>{0}));
}

TEST(Annihilator, Examples) {
  auto A = Q({"x", "y", "t"}, "x^2, x*y, y^2, t^2");
  auto z = annihilator(*A, A->zero());
  EXPECT_EQ(z.basis.size(), A->dim());
  auto t = annihilator(*A, A->parse("t"));
  ASSERT_EQ(t.minimal_generators.size(), 1u);
  EXPECT_EQ(A->to_string(t.minimal_generators[0]), "t");

  auto X = Q({"x"}, "x^4");
  auto a = annihilator(*X, X->parse("x^2"));
  ASSERT_EQ(a.minimal_generators.size(), 1u);
  EXPECT_EQ(X->to_string(a.minimal_generators[0]), "x^2");
  EXPECT_EQ(a.basis.size(), 2u);

  auto g = ideal_generated(*A, {A->parse("x"), A->parse("y"), A->parse("x + y")});
  EXPECT_EQ(g.minimal_generators.size(), 2u);
  EXPECT_THROW(ideal_from_space(*A, {A->parse("t")}), PreconditionError);
}

TEST(ExactPairs, Examples) {
  auto A = Q({"x", "y", "t"}, "x^2, x*y, y^2, t^2");
  auto pairs = find_exact_pairs(*A);
  bool found = false;
  for (const auto& p : pairs) {
    EXPECT_TRUE(is_exact_pair(*A, p.a, p.b));
    auto ann_a = annihilator(*A, p.a), ann_b = annihilator(*A, p.b);
    EXPECT_TRUE(same_space(A->field(), ann_a.basis, ideal_generated(*A, {p.b}).basis, A->dim()));
    EXPECT_TRUE(same_space(A->field(), ann_b.basis, ideal_generated(*A, {p.a}).basis, A->dim()));
    if (A->to_string(p.a) == "t" && A->to_string(p.b) == "t") found = true;
  }
  EXPECT_TRUE(found);

  auto X = Q({"x"}, "x^4");
  auto xp = find_exact_pairs(*X, {X->parse("x^3")});
  ASSERT_FALSE(xp.empty());
  EXPECT_EQ(X->to_string(xp[0].a), "x");
  EXPECT_EQ(X->to_string(xp[0].b), "x^3");

  EXPECT_TRUE(find_exact_pairs(*Q({"x", "y"}, "x^2, x*y, y^2")).empty());
}

TEST(FibreProduct, Examples) {
  auto S = Q({"x"}, "x^2");
  auto T = Q({"y"}, "y^2");
  auto P = fibre_product(*S, *T);
  EXPECT_FALSE(P.trivial);
  EXPECT_TRUE(ideal_equal(P.ideal, Ideal::parse(P.ideal.ring(), "x^2, x*y, y^2")));

  auto P2 = fibre_product(*Q({"x"}, "x^3"), *Q({"y"}, "y^4"));
  EXPECT_TRUE(ideal_equal(P2.ideal, Ideal::parse(P2.ideal.ring(), "x^3, x*y, y^4")));

  auto F = fibre_product(*S, *Q({"z"}, "z"));
  EXPECT_TRUE(F.trivial);
  EXPECT_TRUE(ideal_equal(F.ideal, S->ideal()));

  EXPECT_THROW(fibre_product(*S, *Q({"x"}, "x^3")), PreconditionError);
  EXPECT_THROW(fibre_product(*Q({"a", "b", "c", "d", "e"}, "a, b, c, d^2, e^2"), *Q({"p", "q", "r", "s"}, "p^2, q, r, s")),
               PreconditionError);
}

TEST(FibreProduct, InvariantsAdd) {
  std::vector<AlgebraPtr> left = {Q({"x"}, "x^3"), Q({"x", "y"}, "x^2, y^2"), Q({"x", "y"}, "x^2, x*y, y^3")};
  std::vector<AlgebraPtr> right = {Q({"u"}, "u^2"), Q({"u", "v"}, "u^3, v^2, u*v"), Q({"u", "v"}, "u^2 - v^2, u*v")};
  for (const auto& S : left)
    for (const auto& T : right) {
      auto P = fibre_product(*S, *T);
      auto R = QuotientAlgebra::build(P.ideal);
      EXPECT_EQ(R->edim(), S->edim() + T->edim());
      EXPECT_EQ(R->type(), S->type() + T->type());
      EXPECT_EQ(R->dim(), S->dim() + T->dim() - 1);
    }
}

TEST(SocleQuotient, DropsSocle) {
  auto B = Q({"x", "y"}, "x^4, x^2*y^2, y^4");
  auto Rp = QuotientAlgebra::build(socle_quotient_ideal(*B));
  EXPECT_EQ(Rp->dim(), B->dim() - B->type());
}
