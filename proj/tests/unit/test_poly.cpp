#include <random>

#include <gtest/gtest.h>

#include "burch/poly.hpp"

using namespace burch;

namespace {

RingPtr xyz() { return RingContext::make({"x", "y", "z"}); }

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& R, int nterms, unsigned maxdeg) {
  std::vector<Term> ts;
  for (int i = 0; i < nterms; ++i) {
    std::vector<unsigned> e(R->nvars());
    for (auto& x : e) x = rng() % (maxdeg + 1);
    ts.push_back({static_cast<Residue>(rng() % R->field().modulus()), Monomial(e)});
  }
  return Polynomial::from_terms(R, MonomialOrder::grevlex(), ts);
}

std::vector<Monomial> all_monomials(std::size_t n, unsigned maxdeg) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  for (;;) {
    unsigned d = 0;
    for (auto x : e) d += x;
    if (d <= maxdeg) out.emplace_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] > maxdeg) e[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST(RingContext, Validation) {
  EXPECT_THROW(RingContext::make({}), std::invalid_argument);
  EXPECT_THROW(RingContext::make({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(RingContext::make({""}), std::invalid_argument);
  EXPECT_THROW(RingContext::make({"a", "b", "c", "d", "e", "f", "g", "h", "i"}), std::invalid_argument);
  EXPECT_EQ(RingContext::make({"x", "y"})->nvars(), 2u);
}

TEST(Parse, Examples) {
  auto R = xyz();
  Polynomial f = parse_polynomial("x^4 + x^2*y^2", R);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(parse_polynomial("0", R).is_zero());
  Polynomial g = parse_polynomial("x^2*z^2 - y^2", R);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.terms()[1].mono, Monomial({0, 2, 0}));
  EXPECT_EQ(g.terms()[1].coef, R->field().modulus() - 1);
  EXPECT_EQ(g.to_string(), "x^2*z^2 - y^2");
}

TEST(Parse, Errors) {
  auto R = xyz();
  try {
    parse_polynomial("x + * y", R);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_polynomial("x + w", R), ParseError);
  EXPECT_THROW(parse_polynomial("x y", R), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y", R), ParseError);
  EXPECT_THROW(parse_polynomial("x^", R), ParseError);
}

TEST(Parse, CoefficientsReduceModP) {
  auto R = RingContext::make({"x"}, 101);
  EXPECT_EQ(parse_polynomial("202*x + 103", R).to_string(), "2");
  EXPECT_EQ(parse_polynomial("100*x", R).to_string(), "-x");
  EXPECT_EQ(parse_polynomial("-(x - 1)^2", R).to_string(), "-x^2 + 2*x - 1");
}

TEST(Parse, PrintRoundTrip) {
  std::mt19937_64 rng(7);
  auto R = xyz();
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, R, 1 + rng() % 6, 5);
    Polynomial g = parse_polynomial(f.to_string(), R);
    EXPECT_EQ(f, g);
    EXPECT_EQ(g.to_string(), f.to_string());
  }
}

TEST(Polynomial, MultiplyExamples) {
  auto R = xyz();
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  Polynomial one = Polynomial::constant(R, 1);
  EXPECT_EQ(x * one, x);
  EXPECT_EQ((x * y).to_string(), "x*y");
  EXPECT_EQ(((x + y) * (x - y)).to_string(), "x^2 - y^2");
  auto S = RingContext::make({"u", "v"});
  EXPECT_THROW(x * Polynomial::variable(S, 0), std::invalid_argument);
}

TEST(Polynomial, Homogeneity) {
  auto R = xyz();
  EXPECT_EQ(parse_polynomial("x^2 + x*y", R).homogeneous_degree(), 2u);
  EXPECT_FALSE(parse_polynomial("x^2 + x", R).is_homogeneous());
  EXPECT_FALSE(parse_polynomial("x^2*z^2 - y^2", R).is_homogeneous());
}

TEST(Polynomial, RingAxioms) {
  std::mt19937_64 rng(8);
  auto R = xyz();
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_poly(rng, R, 4, 3), b = random_poly(rng, R, 4, 3), c = random_poly(rng, R, 4, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) EXPECT_EQ((a * b).divide_exact(b), a);
    if (!a.is_zero() && !b.is_zero() && a.is_homogeneous() && b.is_homogeneous())
      EXPECT_EQ((a * b).homogeneous_degree(), *a.homogeneous_degree() + *b.homogeneous_degree());
  }
}

TEST(MonomialOrder, Axioms) {
  auto ms = all_monomials(3, 6);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
    for (const auto& a : ms) {
      EXPECT_LE(ord.compare(Monomial(), a), 0) << ord.name();
      for (const auto& b : ms) {
        int c = ord.compare(a, b);
        ASSERT_EQ(c == 0, a == b) << ord.name();
        ASSERT_EQ(c, -ord.compare(b, a));
      }
    }
    // Multiplicativity and transitivity on a sample.
    for (std::size_t i = 0; i < ms.size(); i += 3)
      for (std::size_t j = 0; j < ms.size(); j += 5)
        for (std::size_t k = 0; k < ms.size(); k += 7) {
          const auto &a = ms[i], &b = ms[j], &m = ms[k];
          ASSERT_EQ(ord.compare(a, b) < 0, ord.compare(m * a, m * b) < 0) << ord.name();
          if (ord.less(a, b) && ord.less(b, m)) ASSERT_TRUE(ord.less(a, m));
        }
  }
}

TEST(MonomialOrder, GrevlexTieBreak) {
  auto g = MonomialOrder::grevlex();
  // x*z < y^2 in grevlex with x > y > z.
  EXPECT_TRUE(g.less(Monomial({1, 0, 1}), Monomial({0, 2, 0})));
  EXPECT_TRUE(g.less(Monomial({0, 1, 0}), Monomial({1, 0, 0})));
  EXPECT_TRUE(MonomialOrder::lex().less(Monomial({0, 5, 0}), Monomial({1, 0, 0})));
  // Elimination order: any monomial with the first variable beats one without.
  EXPECT_TRUE(MonomialOrder::elimination(1).less(Monomial({0, 9, 9}), Monomial({1, 0, 0})));
}

TEST(Substitute, Linear) {
  auto R = xyz();
  auto S = RingContext::make({"y", "z"});
  Polynomial f = parse_polynomial("x^2*z^2 - y^2", R);
  std::vector<Polynomial> img{Polynomial(S), Polynomial::variable(S, 0), Polynomial::variable(S, 1)};
  EXPECT_EQ(substitute(f, img, S).to_string(), "-y^2");
}
