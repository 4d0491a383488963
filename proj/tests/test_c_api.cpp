#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "nhlab/nhlab.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  nhlab_string_free(s);
  return out;
}

struct System {
  nhlab_system* ptr = nullptr;
  explicit System(const char* preset) { EXPECT_EQ(nhlab_system_preset(preset, &ptr), NHLAB_OK) << nhlab_last_error(); }
  ~System() { nhlab_system_free(ptr); }
};

TEST(CApi, EvalActAndMaps) {
  System s2("s2");
  char* out = nullptr;
  ASSERT_EQ(nhlab_eval(s2.ptr, "d[s]*a", &out), NHLAB_OK);
  EXPECT_EQ(take(out), "-a*d[s] + 2");
  ASSERT_EQ(nhlab_act(s2.ptr, "w[s]", "a", &out), NHLAB_OK);
  EXPECT_EQ(take(out), "-a");
  ASSERT_EQ(nhlab_delta(s2.ptr, "d[s]", 0, &out), NHLAB_OK);
  EXPECT_EQ(take(out), "d[s] (x) w[s] + 1 (x) d[s]");
  ASSERT_EQ(nhlab_red(s2.ptr, "w[s]", 0, &out), NHLAB_OK);
  EXPECT_EQ(take(out), "w[s] (x) w[s]");
  ASSERT_EQ(nhlab_epsilon(s2.ptr, "d[s]", &out), NHLAB_OK);
  EXPECT_EQ(take(out), "0");
  EXPECT_NE(std::string(nhlab_blue_header()).find("blue"), std::string::npos);
  EXPECT_NE(std::string(nhlab_red_header()).find("red"), std::string::npos);

  System gl3("gl3");
  ASSERT_EQ(nhlab_act(gl3.ptr, "d[1]", "x1", &out), NHLAB_OK);
  EXPECT_EQ(take(out), "1");
}

TEST(CApi, ElementHandles) {
  System s2("s2");
  nhlab_element *a = nullptr, *b = nullptr, *p = nullptr, *q = nullptr;
  ASSERT_EQ(nhlab_element_parse(s2.ptr, "w[s]", &a), NHLAB_OK);
  ASSERT_EQ(nhlab_element_parse(s2.ptr, "1 - a*d[s]", &b), NHLAB_OK);
  int eq = 0;
  ASSERT_EQ(nhlab_element_equal(a, b, &eq), NHLAB_OK);
  EXPECT_EQ(eq, 1);
  ASSERT_EQ(nhlab_element_mul(a, b, &p), NHLAB_OK);
  char* out = nullptr;
  ASSERT_EQ(nhlab_element_render(p, &out), NHLAB_OK);
  EXPECT_EQ(take(out), "1");
  ASSERT_EQ(nhlab_element_add(a, b, &q), NHLAB_OK);
  ASSERT_EQ(nhlab_element_render(q, &out), NHLAB_OK);
  EXPECT_EQ(take(out), "-2*a*d[s] + 2");
  for (auto* e : {a, b, p, q}) nhlab_element_free(e);
}

TEST(CApi, ErrorsAndPositions) {
  System s2("s2");
  char* out = nullptr;
  EXPECT_EQ(nhlab_eval(s2.ptr, "d[s] + (a", &out), NHLAB_ERR_PARSE);
  EXPECT_GE(nhlab_last_error_position(), 0);
  EXPECT_NE(std::string(nhlab_last_error()), "");
  EXPECT_EQ(nhlab_eval(s2.ptr, "1", &out), NHLAB_OK);
  take(out);
  EXPECT_EQ(std::string(nhlab_last_error()), "");
  EXPECT_EQ(nhlab_last_error_position(), -1);

  nhlab_system* bad = nullptr;
  EXPECT_EQ(nhlab_system_preset("e8", &bad), NHLAB_ERR_CONFIG);
  EXPECT_EQ(nhlab_system_parse("generators = s t\ncoxeter = 1 7; 7 1\n", &bad), NHLAB_ERR_UNSUPPORTED_FIELD);
  EXPECT_EQ(nhlab_system_load("/nonexistent/file.sys", &bad), NHLAB_ERR_CONFIG);
  EXPECT_EQ(nhlab_eval(nullptr, "1", &out), NHLAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_STREQ(nhlab_status_name(NHLAB_OK), nhlab_status_name(static_cast<nhlab_status>(0)));
}

TEST(CApi, SystemParseAndDescribe) {
  nhlab_system* sys = nullptr;
  ASSERT_EQ(nhlab_system_parse("generators = s t\ncoxeter = 1 3; 3 1\nfinite = true\n", &sys), NHLAB_OK)
      << nhlab_last_error();
  EXPECT_EQ(nhlab_system_rank(sys), 2U);
  char* out = nullptr;
  ASSERT_EQ(nhlab_system_describe(sys, &out), NHLAB_OK);
  std::string text = take(out);
  EXPECT_NE(text.find("order: 6"), std::string::npos) << text;
  nhlab_system_free(sys);
}

TEST(CApi, MixedVerifyGallery) {
  System s2("s2");
  char* out = nullptr;
  int pass = 0;
  ASSERT_EQ(nhlab_mixed(s2.ptr, nullptr, nullptr, 3, &out, &pass), NHLAB_OK);
  std::string table = take(out);
  EXPECT_EQ(pass, 1);
  EXPECT_NE(table.find("R_s  PASS  w[s]*d[t]*d[s] + d[s]*d[t]*w[s] = d[t]*w[s]*d[t]"), std::string::npos) << table;
  EXPECT_EQ(nhlab_mixed(s2.ptr, nullptr, nullptr, 0, &out, &pass), NHLAB_ERR_INVALID_ARGUMENT);

  nhlab_verify_options opts;
  nhlab_verify_options_default(&opts);
  opts.samples = 5;
  ASSERT_EQ(nhlab_verify(s2.ptr, "hopf", &opts, &out, &pass), NHLAB_OK);
  std::string first = take(out);
  EXPECT_EQ(pass, 1);
  ASSERT_EQ(nhlab_verify(s2.ptr, "hopf", &opts, &out, &pass), NHLAB_OK);
  EXPECT_EQ(take(out), first);
  EXPECT_EQ(nhlab_verify(s2.ptr, "nope", &opts, &out, &pass), NHLAB_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(nhlab_gallery(&opts, &out, &pass), NHLAB_OK);
  EXPECT_EQ(pass, 1);
  EXPECT_NE(take(out).find("# gallery:"), std::string::npos);
  EXPECT_NE(std::string(nhlab_suite_names()).find("antipode-obstruction"), std::string::npos);
}

TEST(CApi, EnumerationCapFromEnvironment) {
  ASSERT_EQ(setenv("NHLAB_MAX_ELEMENTS", "3", 1), 0);
  nhlab_system* sys = nullptr;
  ASSERT_EQ(nhlab_system_preset("dihedral4", &sys), NHLAB_OK);
  char* out = nullptr;
  EXPECT_EQ(nhlab_system_describe(sys, &out), NHLAB_ERR_ENUMERATION_LIMIT);
  nhlab_system_free(sys);
  unsetenv("NHLAB_MAX_ELEMENTS");
}

}  // namespace
