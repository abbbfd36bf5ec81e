#include <gtest/gtest.h>

#include "burch/burch.hpp"
#include "commands.hpp"

using namespace burch;
using namespace burch::cli;

namespace {

const char* kR8 = R"(# comment line
ring 32003 x y
ideal I = x^4, x^2*y^2, y^4   # trailing comment
ideal J = x^3, y
module M = cyclic J
module F = free 2
)";

}  // namespace

TEST(Session, Parses) {
  Session s = parse_session(kR8);
  EXPECT_EQ(s.ring->names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s.ideal_name(""), "I");
  EXPECT_EQ(s.ideal("J").generators().size(), 2u);
  auto A = QuotientAlgebra::build(s.ideal("I"));
  EXPECT_EQ(s.module(A, "k").dim(), 1u);
  EXPECT_EQ(s.module(A, "M").dim(), 3u);
  EXPECT_EQ(s.module(A, "F").dim(), 2 * A->dim());
  EXPECT_THROW(s.module(A, "N"), UsageError);
  EXPECT_THROW(s.ideal("K"), UsageError);
  EXPECT_EQ(parse_session(kR8, 101).ring->field().modulus(), 101u);
}

TEST(Session, Errors) {
  EXPECT_THROW(parse_session("ideal I = x\n"), SessionError);
  EXPECT_THROW(parse_session("ring 32003 x\nring 32003 y\n"), SessionError);
  EXPECT_THROW(parse_session("ring 32003 x\nideal I = x\nideal I = x^2\n"), SessionError);
  EXPECT_THROW(parse_session("ring 32003 x\nideal k = x\n"), SessionError);
  EXPECT_THROW(parse_session("ring 32003 x\nmodule M = cyclic J\n"), SessionError);
  EXPECT_THROW(parse_session("ring 32003 x\nfrobnicate\n"), SessionError);
  EXPECT_THROW(parse_session("ring 32004 x\n"), SessionError);
  EXPECT_THROW(parse_session(""), SessionError);
  EXPECT_THROW(parse_session("ring 32003 x\nideal I = 1 + x\n"), PreconditionError);
  try {
    parse_session("ring 32003 x y\n\nideal I = x^2 + * y\n");
    FAIL();
  } catch (const SessionError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Commands, CheckAndResolve) {
  Session s = parse_session(kR8);
  Json c = check(s, "", "all");
  EXPECT_FALSE(c["burch"].get<bool>());
  EXPECT_FALSE(c["routes"]["type_count"].get<bool>());
  EXPECT_THROW(check(s, "", "nope"), UsageError);

  Json r = resolve(s, "I", "k", 3);
  EXPECT_EQ(r["betti"], Json::array({1, 2, 4, 8}));
  EXPECT_FALSE(r["k_summand"][1]["summand"].get<bool>());
  EXPECT_TRUE(r["k_summand"][2]["summand"].get<bool>());
  Json f = resolve(s, "I", "F", 3);
  EXPECT_EQ(f["betti"], Json::array({2, 0, 0, 0}));

  Session x = parse_session("ring 32003 x\nideal I = x^3\n");
  EXPECT_TRUE(check(x, "", "definition")["burch"].get<bool>());
  EXPECT_EQ(resolve(x, "", "k", 5)["betti"], Json::array({1, 1, 1, 1, 1, 1}));
  Session line = parse_session("ring 32003 x y\nideal I = x^3\n");
  EXPECT_THROW(resolve(line, "", "k", 3), PreconditionError);
}

TEST(Commands, Deterministic) {
  Session s = parse_session(kR8);
  EXPECT_EQ(mfull(s, "", 10, 5).dump(), mfull(parse_session(kR8), "", 10, 5).dump());
  Options opt;
  opt.max_length = 4;
  EXPECT_EQ(sweep(2, {}, opt).result.dump(), sweep(2, {}, opt).result.dump());
}

TEST(Commands, SweepAndCorpus) {
  Options opt;
  Outcome one = sweep(1, {}, opt);
  EXPECT_EQ(one.result["scanned"], 4);
  EXPECT_EQ(one.exit_code, 0);
  opt.max_length = 4;
  Outcome three = sweep(3, {"all"}, opt);
  EXPECT_EQ(three.result["counterexamples"].size(), 0u);
  EXPECT_THROW(sweep(2, {"bogus"}, opt), UsageError);

  Outcome all = corpus(std::nullopt, opt);
  EXPECT_EQ(all.exit_code, 0) << all.result.dump(1);
  EXPECT_EQ(all.result["failed"], 0);
  Outcome r8 = corpus(std::string("r8"), opt);
  EXPECT_EQ(r8.result["entries"].size(), 1u);
  EXPECT_THROW(corpus(std::string("zz"), opt), UsageError);
  opt.modulus = 101;
  Outcome small = corpus(std::nullopt, opt);
  ASSERT_EQ(small.result["entries"].size(), all.result["entries"].size());
  for (std::size_t i = 0; i < all.result["entries"].size(); ++i)
    for (std::size_t j = 0; j < all.result["entries"][i]["checks"].size(); ++j)
      EXPECT_EQ(small.result["entries"][i]["checks"][j]["actual"], all.result["entries"][i]["checks"][j]["actual"]);
}

TEST(Commands, CutAndFibre) {
  Session s = parse_session("ring 32003 x y z\nideal I = x^2*z^2 - y^2, x^4 - y*z^2, x^2*y - z^4\n");
  Json c = cut(s, "", "x", false);
  EXPECT_EQ(c["variables"], Json::array({"y", "z"}));
  EXPECT_TRUE(c["burch"].get<bool>());
  EXPECT_THROW(cut(s, "", "x^2", false), PreconditionError);
  Session r = parse_session("ring 32003 x y\nideal I = x*y\n");
  EXPECT_THROW(cut(r, "", "x", false), NotRegularError);

  Session a = parse_session("ring 32003 x\nideal I = x^2\n");
  Session b = parse_session("ring 32003 y\nideal I = y^3\n");
  Json f = fibre(a, "I", b, "I");
  EXPECT_TRUE(f["burch"].get<bool>());
  EXPECT_EQ(f["variables"], Json::array({"x", "y"}));
}
