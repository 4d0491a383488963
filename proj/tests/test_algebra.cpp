#include <gtest/gtest.h>

#include <random>

#include "nhlab/coxeter.hpp"
#include "nhlab/error.hpp"
#include "nhlab/polynomial.hpp"
#include "nhlab/rational_function.hpp"
#include "nhlab/scalar.hpp"
#include "test_support.hpp"

using namespace nhlab;
using nhlab::testing::random_poly;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST(Scalar, ReducedFractions) {
  EXPECT_EQ(Scalar::fraction(2, -4), Scalar::fraction(-1, 2));
  EXPECT_EQ(Scalar::fraction(2, -4).to_string(), "-1/2");
  EXPECT_TRUE((Scalar::fraction(1, 3) * Scalar(3)).is_one());
}

TEST(Scalar, QuadraticArithmetic) {
  Scalar r5 = Scalar::sqrt(5);
  EXPECT_EQ(r5 * r5, Scalar(5));
  Scalar phi = (Scalar(1) + r5) * Scalar::fraction(1, 2);
  EXPECT_EQ(phi * phi, phi + Scalar(1));
  EXPECT_EQ(phi * phi.inverse(), Scalar(1));
  EXPECT_EQ(phi.sign(), 1);
  EXPECT_EQ((Scalar(2) - r5).sign(), -1);
  EXPECT_EQ(r5.to_string(), "sqrt5");
}

TEST(Scalar, MismatchedRadicandsThrow) {
  EXPECT_THROW(Scalar::sqrt(5) + Scalar::sqrt(2), Error);
}

TEST(Polynomial, AdditiveInverse) {
  Polynomial a = var(1, 0);
  EXPECT_TRUE((a + (-a)).is_zero());
}

TEST(Polynomial, DifferenceOfSquares) {
  Polynomial x1 = var(2, 0), x2 = var(2, 1);
  EXPECT_EQ((x1 - x2) * (x1 + x2), x1 * x1 - x2 * x2);
  EXPECT_EQ(((x1 - x2) * (x1 + x2)).to_string({"x1", "x2"}), "x1^2 - x2^2");
}

TEST(Polynomial, GradedDegree) {
  Polynomial a = var(1, 0);
  EXPECT_EQ((a * a).degree(), 2);
  EXPECT_EQ((a * a).graded_degree(), 4);
}

TEST(Polynomial, RingMismatch) {
  EXPECT_THROW(var(1, 0) + var(2, 0), Error);
}

TEST(Polynomial, ExactDivideLinear) {
  Polynomial a = var(1, 0);
  EXPECT_EQ(exact_divide_linear(a * a, a), a);
  Polynomial x1 = var(2, 0), x2 = var(2, 1);
  EXPECT_EQ(exact_divide_linear(x1 * x1 - x2 * x2, x1 - x2), x1 + x2);
  try {
    exact_divide_linear(a, a * a);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionNotExact);
  }
}

TEST(Polynomial, GcdOfProducts) {
  Polynomial x = var(3, 0), y = var(3, 1), z = var(3, 2);
  Polynomial common = x * y - z * z + Polynomial(3, Scalar(2));
  Polynomial a = common * (x + y);
  Polynomial b = common * (x - z) * (x - z);
  EXPECT_EQ(gcd(a, b), monic(common));
  EXPECT_EQ(gcd(x + y, x - y), Polynomial(3, Scalar(1)));
}

TEST(RationalFunction, Basics) {
  Polynomial a = var(1, 0);
  RationalFunction inv_a(Polynomial(1, Scalar(1)), a);
  EXPECT_EQ(inv_a * RationalFunction(a), RationalFunction(Polynomial(1, Scalar(1))));
  EXPECT_EQ(inv_a + inv_a, RationalFunction(Polynomial(1, Scalar(2)), a));
  EXPECT_THROW(RationalFunction(a, Polynomial(1)), Error);
}

TEST(RationalFunction, CanonicalEquality) {
  Polynomial x = var(2, 0), y = var(2, 1);
  RationalFunction p(x * x - y * y, Scalar(3) * (x - y));
  RationalFunction q(Scalar(2) * (x + y), Polynomial(2, Scalar(6)));
  EXPECT_EQ(p, q);
  EXPECT_TRUE(p.is_polynomial());
  RationalFunction r(x, x * y + y);
  EXPECT_EQ(RationalFunction(r.numerator(), r.denominator()), r);
  EXPECT_TRUE(r.denominator().leading_coefficient().is_one());
}

TEST(Action, S2) {
  auto sys = CoxeterSystem::build(s2_config());
  Polynomial a = sys->simple_root(0);
  EXPECT_EQ(sys->act({0}, a), -a);
  EXPECT_EQ(sys->act({0}, a * a), a * a);
  EXPECT_EQ(sys->demazure(0, a), Polynomial(1, Scalar(2)));
  EXPECT_TRUE(sys->demazure(0, a * a).is_zero());
  EXPECT_TRUE(sys->is_invariant(a * a));
  EXPECT_FALSE(sys->is_invariant(a));
}

TEST(Action, GlPreset) {
  auto sys = CoxeterSystem::build(gl_config(3));
  Polynomial x1 = var(3, 0), x2 = var(3, 1);
  EXPECT_EQ(sys->act({0}, x1), x2);
  EXPECT_EQ(sys->demazure(0, x1), Polynomial(3, Scalar(1)));
  auto gl2 = CoxeterSystem::build(gl_config(2));
  EXPECT_TRUE(gl2->is_invariant(var(2, 0) + var(2, 1)));
}

class LeibnizProperty : public ::testing::TestWithParam<int> {};

TEST_P(LeibnizProperty, TwistedLeibnizAndNilpotence) {
  SystemConfig cfg = GetParam() == 0 ? gl_config(3) : dihedral_config(GetParam());
  auto sys = CoxeterSystem::build(cfg);
  std::mt19937_64 rng(17 + GetParam());
  for (int i = 0; i < 25; ++i) {
    Polynomial f = random_poly(rng, sys->nvars(), 3);
    Polynomial g = random_poly(rng, sys->nvars(), 3);
    for (std::size_t s = 0; s < sys->rank(); ++s) {
      int si = static_cast<int>(s);
      Polynomial lhs = sys->demazure(si, f * g);
      EXPECT_EQ(lhs, sys->demazure(si, f) * g + sys->reflect(si, f) * sys->demazure(si, g));
      EXPECT_EQ(lhs, sys->demazure(si, f) * sys->reflect(si, g) + f * sys->demazure(si, g));
      EXPECT_TRUE(sys->demazure(si, sys->demazure(si, f)).is_zero());
    }
  }
}

TEST_P(LeibnizProperty, ActionIsRingAutomorphism) {
  SystemConfig cfg = GetParam() == 0 ? gl_config(3) : dihedral_config(GetParam());
  auto sys = CoxeterSystem::build(cfg);
  std::mt19937_64 rng(99 + GetParam());
  auto elements = sys->enumerate(3);
  for (int i = 0; i < 20; ++i) {
    Polynomial f = random_poly(rng, sys->nvars(), 4);
    Polynomial g = random_poly(rng, sys->nvars(), 4);
    const Word& w = elements[static_cast<std::size_t>(i) % elements.size()];
    EXPECT_EQ(sys->act(w, f * g), sys->act(w, f) * sys->act(w, g));
    EXPECT_EQ(sys->act(w, f + g), sys->act(w, f) + sys->act(w, g));
  }
}

INSTANTIATE_TEST_SUITE_P(Systems, LeibnizProperty, ::testing::Values(0, 2, 3, 4, 5, 6));

TEST(DivisionProperty, LinearRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = random_poly(rng, 3, 4);
    Polynomial l = random_poly(rng, 3, 1, 3);
    if (l.degree() != 1 || !l.is_homogeneous()) continue;
    EXPECT_EQ(exact_divide_linear(f * l, l), f);
  }
}

TEST(RationalFunctionProperty, NormalizationIdempotent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_poly(rng, 2, 3);
    Polynomial b = random_poly(rng, 2, 3);
    Polynomial c = random_poly(rng, 2, 2);
    if (b.is_zero() || c.is_zero()) continue;
    RationalFunction r(a * c, b * c);
    EXPECT_EQ(r, RationalFunction(a, b));
    EXPECT_EQ(RationalFunction(r.numerator(), r.denominator()), r);
  }
}
