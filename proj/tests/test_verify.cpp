#include <gtest/gtest.h>

#include "nhlab/error.hpp"
#include "nhlab/verify.hpp"
#include "test_support.hpp"

namespace nhlab {
namespace {

using testing::algebra;

VerifyOptions quick() {
  VerifyOptions o;
  o.samples = 8;
  o.max_deg = 2;
  o.max_support = 3;
  return o;
}

TEST(Verify, SamplingIsDeterministic) {
  auto alg = algebra(dihedral_config(3));
  auto pool = sample_pool(alg->system());
  EXPECT_EQ(pool.size(), 6U);
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 10; ++i) {
    NHElement x = sample_element(a, alg, pool, 3, 4);
    NHElement y = sample_element(b, alg, pool, 3, 4);
    EXPECT_TRUE(x == y);
    EXPECT_FALSE(x.is_zero());
  }
}

TEST(Verify, InfinitePoolIsBounded) {
  auto alg = algebra(dihedral_config(kInfinity));
  EXPECT_FALSE(alg->system().finite());
  for (const auto& w : sample_pool(alg->system())) EXPECT_LE(w.size(), 4U);
}

TEST(Verify, HopfSuitePassesAndIsThreadIndependent) {
  auto alg = algebra(gl_config(3));
  VerifyOptions one = quick();
  one.threads = 1;
  VerifyOptions many = quick();
  many.threads = 4;
  auto a = format_reports({verify_hopf(alg, one)});
  auto b = format_reports({verify_hopf(alg, many)});
  EXPECT_EQ(a, b);
  auto rep = verify_hopf(alg, one);
  EXPECT_EQ(rep.failed(), 0U);
  EXPECT_EQ(rep.records.size(), 8U * 8U);
}

TEST(Verify, MixedRelationCountsAndText) {
  auto alg = algebra(s2_config());
  for (int m = 2; m <= 6; ++m) {
    VerifyOptions o;
    o.m = m;
    auto rep = verify_mixed(alg, o);
    EXPECT_EQ(rep.failed(), 0U) << m;
    EXPECT_EQ(rep.records.size(), static_cast<std::size_t>(2 * m - 1)) << m;
  }
  VerifyOptions o;
  o.m = 3;
  auto rep = verify_mixed(alg, o);
  bool found = false;
  for (const auto& r : rep.records)
    if (r.case_id == "s,t(m=3)/R_st") {
      EXPECT_EQ(r.detail, "w[s]*w[t]*d[s] = d[t]*w[s]*w[t]");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Verify, MixedNeedsAFinitePair) {
  auto alg = algebra(s2_config());
  EXPECT_THROW(run_suite("mixed", alg, VerifyOptions{}), Error);
  auto all = run_suite("all", alg, quick());
  EXPECT_EQ(all.size(), suite_names().size());
  EXPECT_TRUE(all_passed(all));
}

TEST(Verify, BasisAndOracle) {
  for (const auto& c : {s2_config(), dihedral_config(4), gl_config(3)}) {
    auto alg = algebra(c);
    VerifyOptions o = quick();
    o.max_len = 4;
    EXPECT_EQ(verify_basis(alg, o).failed(), 0U);
    EXPECT_EQ(verify_oracle(alg, o).failed(), 0U);
  }
}

TEST(Verify, EtrivObstructionFaithful) {
  for (const auto& c : {s2_config(), gl_config(3), dihedral_config(4)}) {
    auto alg = algebra(c);
    EXPECT_EQ(verify_etriv(alg, {}).failed(), 0U);
    EXPECT_EQ(verify_antipode_obstruction(alg, {}).failed(), 0U);
  }
  EXPECT_EQ(verify_faithful(algebra(s2_config()), {}).failed(), 0U);
  EXPECT_EQ(verify_faithful(algebra(gl_config(3)), {}).failed(), 0U);
  EXPECT_THROW(verify_etriv(algebra(dihedral_config(kInfinity)), {}), Error);
}

TEST(Verify, ReportFormat) {
  SuiteReport rep{"demo", {{"demo", "a", true, "", "info"}, {"demo", "b", false, "x", ""}}, {"# note"}};
  EXPECT_EQ(format_reports({rep}),
            "{\"suite\":\"demo\",\"case\":\"a\",\"status\":\"PASS\",\"detail\":\"info\"}\n"
            "{\"suite\":\"demo\",\"case\":\"b\",\"status\":\"FAIL\",\"witness\":\"x\"}\n"
            "# note\n# demo: 1 passed, 1 failed\n# total: 1 passed, 1 failed\n");
  EXPECT_FALSE(all_passed({rep}));
}

}  // namespace
}  // namespace nhlab
