#include <gtest/gtest.h>

#include <random>

#include "nhlab/error.hpp"
#include "nhlab/io.hpp"
#include "test_support.hpp"

using namespace nhlab;
using nhlab::testing::algebra;
using nhlab::testing::random_element;

namespace {

NHPtr s2() { return algebra(s2_config()); }

std::string eval(const NHPtr& alg, const std::string& text) { return render_element(parse_element(alg, text)); }

std::size_t parse_error_position(const NHPtr& alg, const std::string& text) {
  try {
    parse_element(alg, text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(Render, RankOneExamples) {
  auto alg = s2();
  EXPECT_EQ(eval(alg, "d[s]*a"), "-a*d[s] + 2");
  EXPECT_EQ(eval(alg, "d[s]*d[s]"), "0");
  EXPECT_EQ(eval(alg, "w[s]*w[s]"), "1");
  EXPECT_EQ(eval(alg, "w[s]"), "-a*d[s] + 1");
  EXPECT_EQ(eval(alg, "(a^2 + 1)*d[s] - 3/2"), "(a^2 + 1)*d[s] - 3/2");
}

TEST(Render, Action) {
  auto alg = s2();
  const auto& sys = alg->system();
  EXPECT_EQ(render_polynomial(sys, act(parse_element(alg, "d[s]"), parse_polynomial(sys, "a^2"))), "0");
  EXPECT_EQ(render_polynomial(sys, act(parse_element(alg, "w[s]"), parse_polynomial(sys, "a"))), "-a");
  auto gl = algebra(gl_config(3));
  EXPECT_EQ(render_polynomial(gl->system(), act(parse_element(gl, "d[1]"), parse_polynomial(gl->system(), "x1"))),
            "1");
}

TEST(Render, Tensors) {
  auto alg = s2();
  EXPECT_EQ(render_blue(delta(parse_element(alg, "d[s]"))), "d[s] (x) w[s] + 1 (x) d[s]");
  EXPECT_EQ(render_red(red_map(parse_element(alg, "w[s]"))), "w[s] (x) w[s]");
  EXPECT_EQ(render_blue(delta(parse_element(alg, "w[s]"))), "w[s] (x) w[s]");
  EXPECT_EQ(render_blue_normal(delta(parse_element(alg, "d[s]"))), "-a*d[s] (x) d[s] + d[s] (x) 1 + 1 (x) d[s]");
  EXPECT_EQ(render_blue(delta(NHElement(alg))), "0");
}

TEST(Render, WordsUseGeneratorProducts) {
  auto alg = algebra(dihedral_config(3));
  EXPECT_EQ(eval(alg, "d[s]*d[t]*d[s]"), "d[s]*d[t]*d[s]");
  EXPECT_EQ(eval(alg, "d[tst]"), "d[s]*d[t]*d[s]");
  auto gl = algebra(gl_config(3));
  EXPECT_EQ(eval(gl, "d[2]*d[1]*x1"), "x3*d[2]*d[1] + d[1] + d[2]");
}

TEST(Parse, RoundTrip) {
  std::vector<SystemConfig> configs = {s2_config(), gl_config(3), dihedral_config(4), dihedral_config(5),
                                       dihedral_config(kInfinity)};
  for (const auto& c : configs) {
    auto alg = algebra(c);
    auto pool = alg->system().enumerate(std::optional<std::size_t>(3));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i) {
      NHElement h = random_element(rng, alg, pool, 3, 4);
      if (c.field.radicand == 5) h = h + Scalar::sqrt(5) * h * NHElement::d(alg, 1);
      std::string text = render_element(h);
      EXPECT_TRUE(parse_element(alg, text) == h) << text;
    }
  }
}

TEST(Parse, ScalarsAndPrecedence) {
  EXPECT_EQ(parse_scalar("-3/2"), Scalar::fraction(-3, 2));
  EXPECT_EQ(parse_scalar("(1+sqrt5)/2"), (Scalar(1) + Scalar::sqrt(5)) * Scalar::fraction(1, 2));
  EXPECT_EQ(parse_scalar("2^3 - 2*3"), Scalar(2));
  EXPECT_EQ(parse_scalar("-2^2"), Scalar(-4));
  auto alg = s2();
  EXPECT_EQ(parse_element(alg, "a^2/2"), NHElement::weight(alg, parse_polynomial(alg->system(), "a*a")) *
                                             NHElement::scalar(alg, Scalar::fraction(1, 2)));
}

TEST(Parse, ErrorsCarryPositions) {
  auto alg = s2();
  EXPECT_EQ(parse_error_position(alg, "d[s]*(a"), 7u);
  EXPECT_EQ(parse_error_position(alg, "d[q]"), 0u);
  EXPECT_EQ(parse_error_position(alg, "a/a"), 2u);
  EXPECT_EQ(parse_error_position(alg, "1/0"), 2u);
  EXPECT_EQ(parse_error_position(alg, "sqrt5*a"), 0u);
  EXPECT_EQ(parse_error_position(alg, "b"), 0u);
  EXPECT_EQ(parse_error_position(alg, "a $ 2"), 2u);
  EXPECT_EQ(parse_error_position(alg, "d[s"), 1u);
  EXPECT_EQ(parse_error_position(alg, "a^b"), 2u);
  EXPECT_EQ(parse_error_position(alg, ""), 0u);
  EXPECT_THROW(parse_polynomial(alg->system(), "d[s]"), ParseError);
}

TEST(Config, ParsesKeysAndComments) {
  SystemConfig c = parse_config(
      "# B2\n"
      "generators = s t\n"
      "coxeter = 1 4; 4 1   # m_st = 4\n"
      "pairing = geometric\n"
      "field = rational\n"
      "finite = true\n"
      "variables = a b\n");
  EXPECT_EQ(c.generators, (std::vector<std::string>{"s", "t"}));
  EXPECT_EQ(c.coxeter, (std::vector<std::vector<int>>{{1, 4}, {4, 1}}));
  EXPECT_TRUE(c.finite);
  auto sys = CoxeterSystem::build(c);
  EXPECT_EQ(sys->enumerate(std::nullopt).size(), 8u);
}

TEST(Config, PresetsInfinityAndExplicitPairing) {
  SystemConfig gl = parse_config("pairing = gl(3)\n");
  EXPECT_EQ(gl.pairing, PairingKind::kGl);
  auto sys = CoxeterSystem::build(gl);
  EXPECT_EQ(sys->ring().names, (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(sys->enumerate(std::nullopt).size(), 6u);

  SystemConfig inf = parse_config("generators = s,t\ncoxeter = 1 inf; inf 1\nfinite = false\n");
  EXPECT_EQ(inf.coxeter[0][1], kInfinity);
  EXPECT_NO_THROW(CoxeterSystem::build(inf));

  SystemConfig expl = parse_config("generators = s t\ncoxeter = 1 3; 3 1\npairing = 2 -1; -1 2\nfinite = true\n");
  EXPECT_EQ(expl.pairing, PairingKind::kExplicit);
  EXPECT_EQ(expl.explicit_pairing(0, 1), Scalar(-1));
  EXPECT_EQ(CoxeterSystem::build(expl)->enumerate(std::nullopt).size(), 6u);

  SystemConfig h = parse_config("generators = s t\ncoxeter = 1 5; 5 1\nfield = quadratic:5\nfinite = true\n");
  EXPECT_EQ(CoxeterSystem::build(h)->enumerate(std::nullopt).size(), 10u);
  SystemConfig rank1 = parse_config("generators = s\nvariables = a\n");
  EXPECT_EQ(rank1.coxeter, (std::vector<std::vector<int>>{{1}}));
}

TEST(Config, Rejections) {
  auto code = [](const std::string& text) {
    try {
      CoxeterSystem::build(parse_config(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOk;
  };
  EXPECT_EQ(code("generators = s t\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("generators = s\nbogus = 1\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("generators = s\ngenerators = t\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("generators = s t\ncoxeter = 1 x; x 1\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("generators = s t\ncoxeter = 1 3; 2 1\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("generators = s\nfield = quadratic:7\n"), ErrorCode::kUnsupportedField);
  EXPECT_EQ(code("generators = s t\ncoxeter = 1 5; 5 1\n"), ErrorCode::kUnsupportedField);
  EXPECT_EQ(code("no equals sign\n"), ErrorCode::kConfig);
  EXPECT_EQ(code("generators = s\nvariables = d\n"), ErrorCode::kConfig);
}
