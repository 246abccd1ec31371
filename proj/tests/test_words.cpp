#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pantslab/errors.hpp"
#include "pantslab/words.hpp"

using namespace pantslab;

namespace {

Letters L(std::string_view s) { return parse_letters(s); }

}  // namespace

TEST(FreeReduce, CancelsAdjacentInverses) {
  EXPECT_TRUE(free_reduce(L("xX")).empty());
  EXPECT_EQ(free_reduce(L("yxXy")).to_string(), "yy");
  EXPECT_EQ(free_reduce(L("xyYX")).size(), 0u);
  EXPECT_EQ(free_reduce(L("xyYYyX")).to_string(), "");
}

TEST(FreeReduce, MatchesNaiveScanner) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    Letters w(50);
    for (auto& g : w) g = static_cast<Generator>(pick(rng));
    const auto fast = free_reduce(w);
    const auto slow = oracle::naive_reduce(w);
    ASSERT_EQ(Letters(fast.letters().begin(), fast.letters().end()), slow) << to_string(w);
  }
}

TEST(FreeReduce, GroupAxioms) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(0, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = ReducedWord::reduce(oracle::random_reduced(rng, len(rng)));
    const auto b = ReducedWord::reduce(oracle::random_reduced(rng, len(rng)));
    const auto c = ReducedWord::reduce(oracle::random_reduced(rng, len(rng)));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).empty());
    EXPECT_TRUE((a.inverse() * a).empty());
    EXPECT_EQ(a * ReducedWord::reduce(Letters{}), a);
    EXPECT_EQ(ReducedWord::reduce(a.letters()), a);
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  }
}

TEST(Parse, ExponentsAndWhitespace) {
  EXPECT_EQ(to_string(L("x^3 Y^2")), "xxxYY");
  EXPECT_EQ(to_string(L("  y x  ")), "yx");
  EXPECT_THROW(L("xz"), InvariantViolation);
  EXPECT_THROW(L("x^"), InvariantViolation);
}

TEST(Canonicalize, ShiftAndInversion) {
  EXPECT_EQ(CurveClass::parse("xy"), CurveClass::parse("yx"));
  EXPECT_EQ(CurveClass::parse("xy"), CurveClass::parse("YX"));
  EXPECT_NE(CurveClass::parse("xy"), CurveClass::parse("xY"));
  EXPECT_THROW(CurveClass::parse("xX"), InvariantViolation);
  EXPECT_EQ(CurveClass::parse("yxY"), CurveClass::parse("x"));
}

TEST(Canonicalize, AllVariantsOfSmallestGamma) {
  const CyclicWord w = gamma_word({3, 2, 1});
  std::set<std::string> forms;
  int variants = 0;
  for (const CyclicWord& v : {w, w.inverse()}) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      forms.insert(canonicalize(v.rotated(k)).to_string());
      ++variants;
    }
  }
  EXPECT_EQ(variants, 14);
  EXPECT_EQ(forms.size(), 1u);
}

TEST(Canonicalize, MatchesBruteForceMinimum) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> len(1, 16);
  for (int trial = 0; trial < 300; ++trial) {
    const CyclicWord w = oracle::random_cyclic(rng, len(rng));
    const auto cls = canonicalize(w);
    const auto expect = oracle::brute_canonical(Letters(w.letters().begin(), w.letters().end()));
    ASSERT_EQ(Letters(cls.word().letters().begin(), cls.word().letters().end()), expect);
    const Letters conj = oracle::random_reduced(rng, 5);
    ASSERT_EQ(canonicalize(oracle::conjugate_core(w, conj)), cls);
  }
}

TEST(Primitive, Examples) {
  EXPECT_FALSE(is_primitive(CurveClass::parse("xx")));
  EXPECT_FALSE(is_primitive(CurveClass::parse("xYxY")));
  EXPECT_TRUE(is_primitive(CurveClass::parse("xy")));
  EXPECT_TRUE(is_primitive(canonicalize(gamma_word({19, 8, 5}))));
}

TEST(Primitive, PowersAreDetected) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const CyclicWord w = oracle::random_cyclic(rng, 1 + trial % 7);
    Letters p;
    for (int k = 0; k < 2 + trial % 3; ++k) p.insert(p.end(), w.letters().begin(), w.letters().end());
    EXPECT_FALSE(is_primitive(CyclicWord::from_letters(p)));
  }
}

TEST(TwistTriple, Violations) {
  EXPECT_FALSE(TwistTriple({3, 2, 1}).violation());
  EXPECT_EQ(*TwistTriple({2, 2, 2}).violation(), "a must be odd");
  EXPECT_EQ(*TwistTriple({3, 2, 2}).violation(), "c must be odd");
  EXPECT_EQ(*TwistTriple({3, 3, 1}).violation(), "b must be even");
  EXPECT_EQ(*TwistTriple({5, 2, 3}).violation(), "ordering a >= b >= c violated");
  EXPECT_EQ(*TwistTriple({0, 2, 1}).violation(), "twist parameters must be positive integers");
  EXPECT_THROW(TwistTriple({2, 2, 2}).validate(), InvariantViolation);
}

TEST(GammaWord, Examples) {
  EXPECT_EQ(gamma_word({3, 2, 1}).to_string(), "yxyXyXy");
  EXPECT_EQ(gamma_word({19, 8, 5}).size(), 20u);
  EXPECT_EQ(gamma_word({19, 8, 5}).to_string(), "yxyyyXyyyyXyyyyyyyyy");
  EXPECT_THROW(gamma_word({2, 2, 2}), InvariantViolation);
}

TEST(GammaWord, LengthAndExponentsOnGrid) {
  for (int a = 1; a <= 25; a += 2) {
    for (int b = 2; b <= a; b += 2) {
      for (int c = 1; c <= b; c += 2) {
        const TwistTriple t{a, b, c};
        const CyclicWord w = gamma_word(t);
        EXPECT_EQ(w.size(), static_cast<std::size_t>(4 + (a + b + c) / 2));
        std::vector<int> expect{(a - 1) / 2 + 1, (c + 1) / 2, b / 2};
        std::sort(expect.begin(), expect.end());
        EXPECT_EQ(y_exponent_multiset(canonicalize(w)), expect) << t.to_string();
      }
    }
  }
}

TEST(YExponents, Examples) {
  EXPECT_EQ(y_exponent_multiset(canonicalize(gamma_word({3, 2, 1}))), (std::vector<int>{1, 1, 2}));
  EXPECT_TRUE(y_exponent_multiset(CurveClass::parse("x")).empty());
  const std::vector<int> a{-2, -1}, b{1, 2}, c{1, 3};
  EXPECT_TRUE(same_up_to_sign(a, b));
  EXPECT_FALSE(same_up_to_sign(a, c));
}
