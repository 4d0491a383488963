#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "nhlab/coxeter.hpp"
#include "nhlab/error.hpp"

using namespace nhlab;

namespace {

// Independent model of S_n: words become permutations, length is the inversion count.
std::vector<int> permutation(int n, const Word& w) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    for (auto& x : p) {
      if (x == *it) x = *it + 1;
      else if (x == *it + 1) x = *it;
    }
  }
  return p;
}

std::size_t inversions(const std::vector<int>& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

ErrorCode build_error(const SystemConfig& c) {
  try {
    CoxeterSystem::build(c);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace

TEST(Build, S2) {
  auto sys = CoxeterSystem::build(s2_config());
  EXPECT_EQ(sys->rank(), 1u);
  EXPECT_EQ(sys->cartan(0, 0), Scalar(2));
}

TEST(Build, GlPresetVariables) {
  auto sys = CoxeterSystem::build(gl_config(3));
  EXPECT_EQ(sys->ring().names, (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(sys->simple_root(0).to_string(sys->ring().names), "x1 - x2");
  EXPECT_EQ(sys->simple_root(1).to_string(sys->ring().names), "x2 - x3");
}

TEST(Build, UnsupportedOrder) {
  EXPECT_EQ(build_error(dihedral_config(7)), ErrorCode::kUnsupportedField);
  SystemConfig five = dihedral_config(5);
  five.field = Field::rational();
  EXPECT_EQ(build_error(five), ErrorCode::kUnsupportedField);
}

TEST(Build, InconsistentMatrices) {
  SystemConfig c = dihedral_config(3);
  c.coxeter = {{1, 3}, {4, 1}};
  EXPECT_EQ(build_error(c), ErrorCode::kConfig);
  SystemConfig p = dihedral_config(3);
  p.pairing = PairingKind::kExplicit;
  p.explicit_pairing = Matrix(2, 2);
  p.explicit_pairing(0, 0) = Scalar(2);
  p.explicit_pairing(1, 1) = Scalar(2);
  p.explicit_pairing(0, 1) = Scalar(-1);
  p.explicit_pairing(1, 0) = Scalar(-2);
  EXPECT_EQ(build_error(p), ErrorCode::kConfig);
}

TEST(Build, ExplicitPairingAccepted) {
  SystemConfig p = dihedral_config(4);
  p.pairing = PairingKind::kExplicit;
  p.explicit_pairing = Matrix(2, 2);
  p.explicit_pairing(0, 0) = Scalar(2);
  p.explicit_pairing(1, 1) = Scalar(2);
  p.explicit_pairing(0, 1) = Scalar(-2);
  p.explicit_pairing(1, 0) = Scalar(-1);
  EXPECT_EQ(CoxeterSystem::build(p)->enumerate(std::nullopt).size(), 8u);
}

TEST(Descent, Examples) {
  auto s2 = CoxeterSystem::build(s2_config());
  EXPECT_TRUE(s2->is_left_descent(0, {0}));
  EXPECT_FALSE(s2->is_left_descent(0, {}));
  auto s3 = CoxeterSystem::build(gl_config(3));
  Word w = s3->canonical_form({1, 0});
  EXPECT_FALSE(s3->is_left_descent(0, w));
  EXPECT_TRUE(s3->is_left_descent(1, w));
}

TEST(Descent, MatchesPermutationModel) {
  for (int n : {3, 4}) {
    auto sys = CoxeterSystem::build(gl_config(n));
    auto all = sys->enumerate(std::nullopt);
    std::set<std::vector<int>> perms;
    for (const auto& w : all) {
      auto p = permutation(n, w);
      perms.insert(p);
      EXPECT_EQ(inversions(p), w.size());
      for (int s = 0; s + 1 < n; ++s) {
        Word sw{s};
        sw.insert(sw.end(), w.begin(), w.end());
        bool model = inversions(permutation(n, sw)) < w.size();
        EXPECT_EQ(sys->is_left_descent(s, w), model);
      }
    }
    std::size_t fact = n == 3 ? 6 : 24;
    EXPECT_EQ(all.size(), fact);
    EXPECT_EQ(perms.size(), fact);
  }
}

TEST(CanonicalForm, Examples) {
  auto s2 = CoxeterSystem::build(s2_config());
  EXPECT_TRUE(s2->canonical_form({0, 0}).empty());
  auto i5 = CoxeterSystem::build(dihedral_config(5));
  EXPECT_EQ(i5->canonical_form({1, 0, 1, 0, 1, 0, 1}), (Word{0, 1, 0}));
  auto a2 = CoxeterSystem::build(dihedral_config(3));
  EXPECT_EQ(a2->canonical_form({0, 1, 0}), a2->canonical_form({1, 0, 1}));
  EXPECT_EQ(a2->canonical_form({1, 0, 1}), (Word{0, 1, 0}));
}

TEST(CanonicalForm, IsReduced) {
  auto a2 = CoxeterSystem::build(dihedral_config(3));
  EXPECT_TRUE(a2->is_reduced({0, 1, 0}));
  EXPECT_FALSE(a2->is_reduced({0, 0}));
  EXPECT_TRUE(a2->is_reduced({}));
}

TEST(CanonicalForm, InvariantUnderMoves) {
  for (int m : {2, 3, 4, 5, 6}) {
    auto sys = CoxeterSystem::build(dihedral_config(m));
    for (const auto& w : sys->enumerate(std::nullopt)) {
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (int s : {0, 1}) {
          Word inserted = w;
          inserted.insert(inserted.begin() + static_cast<long>(pos), {s, s});
          EXPECT_EQ(sys->canonical_form(inserted), w);
        }
        Word braided = w;
        auto a = alternating_word(0, 1, static_cast<std::size_t>(m));
        auto b = alternating_word(1, 0, static_cast<std::size_t>(m));
        Word x = braided, y = braided;
        x.insert(x.begin() + static_cast<long>(pos), a.begin(), a.end());
        y.insert(y.begin() + static_cast<long>(pos), b.begin(), b.end());
        EXPECT_EQ(sys->canonical_form(x), sys->canonical_form(y));
      }
      // The canonical word is the smallest reduced word: no smaller reduced word of equal length exists.
      EXPECT_TRUE(sys->is_reduced(w));
    }
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(CoxeterSystem::build(s2_config())->enumerate(std::nullopt).size(), 2u);
  auto s3 = CoxeterSystem::build(gl_config(3));
  auto all = s3->enumerate(std::nullopt);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_EQ(s3->longest_element().size(), 3u);
  for (int m : {2, 3, 4, 5, 6})
    EXPECT_EQ(CoxeterSystem::build(dihedral_config(m))->enumerate(std::nullopt).size(),
              static_cast<std::size_t>(2 * m));
}

TEST(Enumerate, InfiniteGuard) {
  auto sys = CoxeterSystem::build(dihedral_config(kInfinity));
  EXPECT_THROW(sys->enumerate(std::nullopt), Error);
  EXPECT_EQ(sys->enumerate(3).size(), 7u);
}

TEST(Enumerate, CeilingApplies) {
  SystemConfig c = gl_config(4);
  c.max_elements = 10;
  auto sys = CoxeterSystem::build(c);
  try {
    sys->enumerate(std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEnumerationLimit);
  }
}

TEST(Enumerate, Deterministic) {
  auto a = CoxeterSystem::build(dihedral_config(5))->enumerate(std::nullopt);
  auto b = CoxeterSystem::build(dihedral_config(5))->enumerate(std::nullopt);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), WordLess{}));
}

TEST(Roots, PositiveRoots) {
  auto s2 = CoxeterSystem::build(s2_config());
  EXPECT_EQ(s2->positive_roots().size(), 1u);
  auto s3 = CoxeterSystem::build(gl_config(3));
  std::set<std::string> got;
  for (const auto& r : s3->positive_roots()) got.insert(s3->root_polynomial(r).to_string(s3->ring().names));
  EXPECT_EQ(got, (std::set<std::string>{"x1 - x2", "x2 - x3", "x1 - x3"}));
  EXPECT_EQ(CoxeterSystem::build(dihedral_config(4))->positive_roots().size(), 4u);
}

TEST(Roots, LengthEqualsInversionCount) {
  for (auto cfg : {gl_config(3), gl_config(4), dihedral_config(4), dihedral_config(5), dihedral_config(6)}) {
    auto sys = CoxeterSystem::build(cfg);
    for (const auto& w : sys->enumerate(std::nullopt)) EXPECT_EQ(sys->inversion_count(w), w.size());
  }
}

TEST(Longest, Parabolic) {
  auto a2 = CoxeterSystem::build(dihedral_config(3));
  EXPECT_EQ(a2->longest_element(0, 1), a2->canonical_form({1, 0, 1}));
  EXPECT_EQ(a2->longest_element(0, 1).size(), 3u);
  EXPECT_EQ(CoxeterSystem::build(s2_config())->longest_element(), (Word{0}));
  EXPECT_EQ(a2->parabolic_elements(0, 1).size(), 6u);
}

TEST(Subexpressions, Counts) {
  EXPECT_EQ(embedded_subexpressions({0, 1, 0}).size(), 8u);
  EXPECT_EQ(embedded_subexpressions({}).size(), 1u);
  EXPECT_EQ(embedded_subexpressions({0, 1, 0, 1}).size(), 16u);
  auto first = embedded_subexpressions({0, 1, 0}).front();
  EXPECT_EQ(first.subexpression(), (Word{0, 1, 0}));
}

TEST(Words, NameRoundTrip) {
  auto a2 = CoxeterSystem::build(dihedral_config(3));
  EXPECT_EQ(a2->word_name({0, 1}), "st");
  EXPECT_EQ(a2->parse_word("st"), (Word{0, 1}));
  EXPECT_EQ(a2->word_name({}), "1");
}
