#include <set>

#include <gtest/gtest.h>

#include "burch/errors.hpp"
#include "burch/monomial.hpp"

using namespace burch;

namespace {

RingPtr xy() { return RingContext::make({"x", "y"}); }

MonomialIdeal M(const RingPtr& R, const char* s) { return *MonomialIdeal::from_ideal(Ideal::parse(R, s)); }

// Determinant by cofactor expansion along the first column.
Polynomial det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Polynomial acc(m.ring());
  for (std::size_t r = 0; r < n; ++r) {
    if (m(r, 0).is_zero()) continue;
    PolyMatrix sub(m.ring(), n - 1, n - 1);
    for (std::size_t i = 0, si = 0; i < n; ++i) {
      if (i == r) continue;
      for (std::size_t j = 1; j < n; ++j) sub.at(si, j - 1) = m(i, j);
      ++si;
    }
    Polynomial t = m(r, 0) * det(sub);
    acc = r % 2 ? acc - t : acc + t;
  }
  return acc;
}

Ideal maximal_minors(const PolyMatrix& m) {
  std::vector<Polynomial> minors;
  for (std::size_t drop = 0; drop < m.rows(); ++drop) {
    PolyMatrix sub(m.ring(), m.cols(), m.cols());
    for (std::size_t i = 0, si = 0; i < m.rows(); ++i) {
      if (i == drop) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) sub.at(si, j) = m(i, j);
      ++si;
    }
    minors.push_back(det(sub));
  }
  return Ideal(m.ring(), minors);
}

}  // namespace

TEST(MonomialIdeal, MinimalizesAndSorts) {
  auto R = xy();
  MonomialIdeal a(R, {Monomial({0, 4}), Monomial({4, 0}), Monomial({2, 2}), Monomial({4, 1}), Monomial({2, 2})});
  ASSERT_EQ(a.generators().size(), 3u);
  EXPECT_EQ(a.generators()[0], Monomial({4, 0}));
  EXPECT_EQ(a.generators()[2], Monomial({0, 4}));
  EXPECT_EQ(a, M(R, "y^4, x^2*y^2, x^4"));
  EXPECT_FALSE(MonomialIdeal::from_ideal(Ideal::parse(R, "x + y")).has_value());
}

TEST(MonomialIdeal, ColonByMaximalExamples) {
  auto R = xy();
  EXPECT_EQ(mono_colon_m(M(R, "x^4, x^2*y^2, y^4")), M(R, "x^4, x^3*y, x^2*y^2, x*y^3, y^4"));
  EXPECT_TRUE(mono_colon_m(MonomialIdeal::maximal(R)).contains_unit());
  EXPECT_EQ(mono_colon_m(M(R, "x^3")), M(R, "x^3"));
}

TEST(MonomialIdeal, BurchExamples) {
  auto R = xy();
  EXPECT_FALSE(burch_monomial(M(R, "x^4, x^2*y^2, y^4")).burch);
  auto v = burch_monomial(M(R, "x^4, x^3*y, x*y^3, y^4"));
  ASSERT_TRUE(v.burch);
  EXPECT_TRUE(witness_valid(M(R, "x^4, x^3*y, x*y^3, y^4"), *v.witness));
  EXPECT_TRUE(witness_valid(M(R, "x^4, x^3*y, x*y^3, y^4"), {Monomial({3, 1}), 1}));

  auto X = RingContext::make({"x"});
  auto w = burch_monomial(M(X, "x^3"));
  ASSERT_TRUE(w.burch);
  EXPECT_EQ(w.witness->generator, Monomial({3}));
  EXPECT_EQ(w.witness->variable, 0u);
}

TEST(MonomialIdeal, TwoVariableCriterion) {
  auto R = xy();
  EXPECT_FALSE(burch_twovar(M(R, "x^4, x^2*y^2, y^4")));
  EXPECT_TRUE(burch_twovar(M(R, "x^4, x^3*y, x*y^3, y^4")));
  EXPECT_TRUE(burch_twovar(MonomialIdeal::maximal(R)));
  Staircase s = staircase(M(R, "x^4, x^3*y, x*y^3, y^4"));
  EXPECT_EQ(s.a, (std::vector<unsigned>{4, 3, 1, 0}));
  EXPECT_EQ(s.b, (std::vector<unsigned>{0, 1, 3, 4}));
  EXPECT_THROW(burch_twovar(M(R, "x^2, x*y")), PreconditionError);
  EXPECT_THROW(burch_twovar(M(RingContext::make({"x", "y", "z"}), "x, y, z")), PreconditionError);
}

TEST(MonomialIdeal, HilbertBurchExamples) {
  auto R = xy();
  PolyMatrix hb = hilbert_burch_twovar(M(R, "x^4, x^2*y^2, y^4"));
  EXPECT_EQ(hb.to_string(), "[y^2, 0; -x^2, y^2; 0, -x^2]");
  EXPECT_TRUE(ideal_equal(entry_ideal(hb), Ideal::parse(R, "x^2, y^2")));
  EXPECT_EQ(hilbert_burch_twovar(MonomialIdeal::maximal(R)).to_string(), "[y; -x]");
  EXPECT_TRUE(ideal_equal(entry_ideal(hilbert_burch_twovar(M(R, "x^4, x^3*y, x*y^3, y^4"))), Ideal::maximal(R)));
}

TEST(Enumeration, Counts) {
  auto R = xy();
  EXPECT_EQ(enumerate_mprimary(R, 0).size(), 1u);
  EXPECT_EQ(enumerate_mprimary(R, 0)[0], MonomialIdeal::maximal(R));
  auto d1 = enumerate_mprimary(R, 1);
  std::set<std::string> got;
  for (const auto& a : d1) got.insert(a.to_string());
  std::set<std::string> want;
  for (const char* s : {"x, y", "x^2, y", "x, y^2", "x^2, x*y, y^2"}) want.insert(M(R, s).to_string());
  EXPECT_EQ(got, want);
  EXPECT_EQ(d1.size(), 4u);
  for (unsigned d = 0; d <= 6; ++d) EXPECT_EQ(enumerate_mprimary(R, d).size(), mprimary_count(d)) << d;
  EXPECT_EQ(mprimary_count(5), 428u);
  EXPECT_THROW(enumerate_mprimary(R, 8), PreconditionError);
  EXPECT_THROW(enumerate_mprimary(RingContext::make({"x", "y", "z"}), 2), PreconditionError);
}

TEST(Enumeration, CompleteAndDistinct) {
  auto R = xy();
  auto d2 = enumerate_mprimary(R, 2);
  std::set<std::string> seen;
  Ideal m3 = ideal_power(Ideal::maximal(R), 3);
  for (const auto& a : d2) {
    EXPECT_TRUE(seen.insert(a.to_string()).second);
    EXPECT_TRUE(a.is_m_primary());
    EXPECT_TRUE(a.to_ideal().contains(m3));
  }
  for (const char* s : {"x^3, x^2*y, x*y^2, y^3", "x^2, y^2", "x^2, x*y, y^3"}) EXPECT_TRUE(seen.count(M(R, s).to_string())) << s;
  // x*y^2 is a socle element of degree 3, so these only appear from d = 3 on.
  std::set<std::string> seen3;
  for (const auto& a : enumerate_mprimary(R, 3)) seen3.insert(a.to_string());
  for (const char* s : {"x^2, y^3", "x^3, y^2"}) {
    EXPECT_FALSE(seen.count(M(R, s).to_string())) << s;
    EXPECT_TRUE(seen3.count(M(R, s).to_string())) << s;
  }
  // Brute force: ideals between m^3 and m are the upward-closed sets of monomials of degree 1 and 2.
  std::size_t brute = 0;
  std::vector<Monomial> tri;
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; a + b <= 2; ++b)
      if (a + b > 0) tri.push_back(Monomial({a, b}));
  for (unsigned mask = 0; mask < (1u << tri.size()); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < tri.size() && closed; ++i)
      if (mask >> i & 1)
        for (std::size_t j = 0; j < tri.size(); ++j)
          if (!(mask >> j & 1) && tri[i].divides(tri[j])) closed = false;
    brute += closed;
  }
  EXPECT_EQ(brute, d2.size());
}

TEST(Enumeration, CriteriaAgree) {
  auto R = xy();
  for_each_mprimary(R, 5, [&](const MonomialIdeal& a) {
    bool b = burch_twovar(a);
    EXPECT_EQ(burch_monomial(a).burch, b) << a.to_string();
    EXPECT_TRUE(ideal_equal(mono_colon_m(a).to_ideal(), ideal_colon(a.to_ideal(), Ideal::maximal(R))))
        << a.to_string();
    // entry ideal of the Hilbert-Burch matrix contains a variable iff Burch
    if (a.generators().size() > 1) {
      Ideal e = entry_ideal(hilbert_burch_twovar(a));
      bool has_var = e.contains(Polynomial::variable(R, 0)) || e.contains(Polynomial::variable(R, 1));
      EXPECT_EQ(has_var, b) << a.to_string();
    }
    // mu(mI) < 2 mu(I) iff Burch
    std::size_t mu = a.generators().size();
    std::size_t mu_mi = mono_product(MonomialIdeal::maximal(R), a).generators().size();
    EXPECT_EQ(mu_mi < 2 * mu, b) << a.to_string();
  });
}

TEST(Enumeration, HilbertBurchMatrices) {
  auto R = xy();
  for_each_mprimary(R, 5, [&](const MonomialIdeal& a) {
    if (a.generators().size() < 2 || a.generators().size() > 6) return;
    PolyMatrix hb = hilbert_burch_twovar(a);
    EXPECT_TRUE(ideal_equal(maximal_minors(hb), a.to_ideal())) << a.to_string();
    SyzygyMatrix s = syzygy_matrix(a.to_ideal());
    EXPECT_EQ(s.matrix.cols(), hb.cols()) << a.to_string();
    EXPECT_TRUE(ideal_equal(entry_ideal(s.matrix), entry_ideal(hb))) << a.to_string();
    // each closed-form column is a syzygy of the ordered generators
    Ideal ai = a.to_ideal();
    const auto& g = ai.generators();
    for (std::size_t c = 0; c < hb.cols(); ++c) {
      Polynomial acc(R);
      for (std::size_t r = 0; r < hb.rows(); ++r) acc = acc + hb(r, c) * g[r];
      EXPECT_TRUE(acc.is_zero());
    }
  });
}
