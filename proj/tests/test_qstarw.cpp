#include <gtest/gtest.h>

#include <random>

#include "nhlab/hopf.hpp"
#include "nhlab/qstarw.hpp"
#include "test_support.hpp"

using namespace nhlab;
using nhlab::testing::algebra;
using nhlab::testing::random_element;

namespace {

RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }

struct Rank1 {
  NHPtr alg = algebra(s2_config());
  SystemPtr sys = alg->system_ptr();
  Polynomial a = sys->simple_root(0);
  NHElement d = NHElement::d(alg, 0);
  NHElement s = NHElement::group(alg, 0);
  QWElement one = QWElement::scalar(sys, rf(Polynomial(1, Scalar(1))));
  QWElement g = QWElement::group(sys, {0});
};

std::vector<SystemConfig> oracle_systems() {
  return {s2_config(), gl_config(3), dihedral_config(4), dihedral_config(5), dihedral_config(kInfinity)};
}

}  // namespace

TEST(QW, TwistedProduct) {
  Rank1 r;
  EXPECT_EQ(qw_mul(r.g, r.g), r.one);
  QWElement inv = QWElement::scalar(r.sys, rf(r.a).inverse());
  QWElement alpha = QWElement::scalar(r.sys, rf(r.a));
  EXPECT_EQ(qw_mul(inv, alpha), r.one);
  // s a = -a s.
  EXPECT_EQ(qw_mul(r.g, alpha), rf(-r.a) * r.g);
  QWElement dd = qw_mul(inv, r.one - r.g);
  EXPECT_TRUE(qw_mul(dd, dd).is_zero());
}

TEST(QW, EmbedGenerators) {
  Rank1 r;
  QWElement inv = QWElement::scalar(r.sys, rf(r.a).inverse());
  EXPECT_EQ(embed(r.d), qw_mul(inv, r.one - r.g));
  EXPECT_EQ(embed(r.s), r.g);
  auto alg = algebra(dihedral_config(3));
  EXPECT_FALSE(embed(NHElement::d_word(alg, {0, 1, 0})).is_zero());
  NHElement ds = NHElement::d(alg, 0);
  EXPECT_TRUE(qw_mul(embed(ds), embed(ds)).is_zero());
}

TEST(QW, OracleEquality) {
  Rank1 r;
  NHElement lhs = r.d * NHElement::weight(r.alg, r.a);
  NHElement rhs = NHElement::weight(r.alg, -r.a) * r.d + NHElement::scalar(r.alg, Scalar(2));
  EXPECT_TRUE(oracle_equal(lhs, rhs));
  EXPECT_FALSE(oracle_equal(r.d, NHElement(r.alg)));
  auto alg = algebra(dihedral_config(3));
  NHElement s = NHElement::group(alg, 0), t = NHElement::group(alg, 1);
  NHElement ds = NHElement::d(alg, 0), dt = NHElement::d(alg, 1);
  EXPECT_TRUE(oracle_equal(s * dt * ds + ds * dt * s, dt * s * dt));
}

TEST(QW, StructureMaps) {
  Rank1 r;
  QWElement x = rf(r.a * r.a) * r.g;
  EXPECT_EQ(epsilon_qw(x), rf(r.a * r.a));
  QWTensor dq = delta_qw(x);
  ASSERT_EQ(dq.size(), 1u);
  EXPECT_EQ(dq.begin()->first, (WordPair{{0}, {0}}));
  // Delta(d) = (1/a)(1 (x) 1 - s (x) s) matches the nil Hecke comultiplication.
  EXPECT_EQ(delta_qw(embed(r.d)), embed_tensor(delta(r.d)));
  EXPECT_EQ(red_qw(embed(r.d)), embed_red_tensor(red_map(r.d)));
}

TEST(QW, AntipodeLeavesNilHecke) {
  Rank1 r;
  QWElement sd = antipode_qw(embed(r.d));
  QWElement inv = QWElement::scalar(r.sys, rf(r.a).inverse());
  EXPECT_EQ(sd, qw_mul(r.one - r.g, inv));
  EXPECT_FALSE(in_image_of_nh(sd));
  EXPECT_TRUE(in_image_of_nh(embed(r.d)));
  EXPECT_TRUE(in_image_of_nh(QWElement::scalar(r.sys, rf(r.a * r.a + r.a))));
  EXPECT_EQ(antipode_qw(r.g), r.g);
  EXPECT_EQ(antipode_qw(QWElement::scalar(r.sys, rf(r.a))), QWElement::scalar(r.sys, rf(r.a)));
}

TEST(QW, CoordinatesRecoverElement) {
  auto alg = algebra(gl_config(3));
  auto pool = alg->system().enumerate(std::nullopt);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    NHElement h = random_element(rng, alg, pool, 2, 4);
    auto coords = nh_coordinates(embed(h));
    ASSERT_TRUE(coords.has_value());
    EXPECT_EQ(NHElement(alg, *coords), h);
  }
}

class OracleProperties : public ::testing::TestWithParam<int> {};

TEST_P(OracleProperties, EmbedIsMultiplicativeAndDeltaAgrees) {
  auto alg = algebra(oracle_systems()[static_cast<std::size_t>(GetParam())]);
  const SystemPtr& sys = alg->system_ptr();
  auto pool = sys->enumerate(std::optional<std::size_t>(3));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 8; ++i) {
    NHElement a = random_element(rng, alg, pool, 2, 3);
    NHElement b = random_element(rng, alg, pool, 2, 3);
    QWElement ea = embed(a), eb = embed(b);
    EXPECT_EQ(embed(a * b), qw_mul(ea, eb));
    EXPECT_EQ(delta_qw(ea), embed_tensor(delta(a)));
    EXPECT_EQ(red_qw(ea), embed_red_tensor(red_map(a)));
    EXPECT_EQ(antipode_qw(antipode_qw(ea)), ea);
    EXPECT_EQ(antipode_qw(qw_mul(ea, eb)), qw_mul(antipode_qw(eb), antipode_qw(ea)));
    EXPECT_EQ(antipode_from_red(sys, red_qw(ea)), antipode_qw(ea));
    EXPECT_EQ(epsilon_qw(ea), RationalFunction(act(a, Polynomial(sys->nvars(), Scalar(1)))));
  }
}

INSTANTIATE_TEST_SUITE_P(Systems, OracleProperties, ::testing::Values(0, 1, 2, 3, 4));
