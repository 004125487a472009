#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "pnsup/marking.hpp"

namespace pnsup {
namespace {

const std::vector<std::string> kSeven = {"P1", "P2", "P3", "P4", "P5", "P6", "P7"};
const std::vector<std::string> kSix = {"P1", "P2", "P3", "P4", "P5", "P6"};

TEST(Support, SafeVector) {
  EXPECT_EQ(support_word(Marking{1, 0, 1, 0, 0, 1, 0}, kSeven), "P1 P3 P6");
}

TEST(Support, PowersForMultipleTokens) {
  EXPECT_EQ(support_word(Marking{1, 0, 2, 0, 0, 1, 0}, kSeven), "P1 P3^2 P6");
}

TEST(Support, ZeroMarkingIsEmptyWord) {
  EXPECT_EQ(support_word(Marking(7), kSeven), "");
  EXPECT_EQ(support_set(std::vector<Marking>{}, kSeven), "{}");
}

TEST(Support, ParseRejectsUnknownPlace) {
  EXPECT_THROW(parse_support_word("P9", kSix), std::invalid_argument);
  EXPECT_THROW(parse_support_word("P1^0", kSix), std::invalid_argument);
  EXPECT_THROW(parse_support_word("P1^x", kSix), std::invalid_argument);
}

TEST(Support, RepeatedPlaceAccumulates) {
  EXPECT_EQ(parse_support_word("P3 P3 P1", kSix), (Marking{1, 0, 2, 0, 0, 0}));
}

TEST(Support, InverseOnRandomNonzeroMarkings) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<TokenCount> count(0, 4);
  for (int i = 0; i < 500; ++i) {
    Marking m(kSix.size());
    for (std::size_t p = 0; p < m.size(); ++p) m[p] = count(rng);
    if (m.is_zero()) continue;
    EXPECT_EQ(parse_support_word(support_word(m, kSix), kSix), m);
  }
}

TEST(Order, OverstateExamples) {
  const auto P = [](std::string_view w) { return parse_support_word(w, kSix); };
  EXPECT_TRUE(is_overstate(P("P4"), P("P1 P4 P5")));
  EXPECT_FALSE(is_overstate(P("P4^2"), P("P1 P4 P5")));
  EXPECT_FALSE(is_overstate(P("P1 P4 P5"), P("P1 P4 P5")));
}

TEST(Order, CoversExamples) {
  const auto P = [](std::string_view w) { return parse_support_word(w, kSix); };
  EXPECT_TRUE(covers(P("P4^2"), P("P1 P4^2 P5")));
  EXPECT_FALSE(covers(P("P4^2"), P("P1 P3 P4 P5")));
  EXPECT_TRUE(covers(P("P1 P3 P6"), P("P1 P3 P6")));
}

TEST(Order, DimensionMismatchThrows) {
  EXPECT_THROW(covers(Marking{1, 0}, Marking{1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(is_overstate(Marking{1}, Marking{1, 0}), std::invalid_argument);
}

// Exhaustive over every sub-marking of a bounded marking.
TEST(Order, OverstateIsStrictPartialOrder) {
  const Marking top{2, 1, 2};
  std::vector<Marking> all;
  for (TokenCount a = 0; a <= top[0]; ++a)
    for (TokenCount b = 0; b <= top[1]; ++b)
      for (TokenCount c = 0; c <= top[2]; ++c) all.push_back(Marking{a, b, c});
  for (const auto& x : all) {
    EXPECT_FALSE(is_overstate(x, x));
    for (const auto& y : all) {
      if (is_overstate(x, y)) EXPECT_FALSE(is_overstate(y, x));
      for (const auto& z : all) {
        if (is_overstate(x, y) && is_overstate(y, z)) EXPECT_TRUE(is_overstate(x, z));
      }
    }
  }
}

TEST(Order, CanonicalOrdering) {
  const auto P = [](std::string_view w) { return parse_support_word(w, kSix); };
  CanonicalLess less;
  EXPECT_TRUE(less(P("P4"), P("P6")));
  EXPECT_TRUE(less(P("P6"), P("P4^2")));  // fewer tokens first
  EXPECT_TRUE(less(P("P4^2"), P("P1 P4")));  // fewer places first
  EXPECT_TRUE(less(P("P1 P4"), P("P1 P5")));
  EXPECT_FALSE(less(P("P1 P5"), P("P1 P5")));
}

TEST(Marking, Counters) {
  const Marking m{0, 3, 0, 1};
  EXPECT_EQ(m.marked_places(), 2u);
  EXPECT_EQ(m.total_tokens(), 4u);
  EXPECT_FALSE(m.is_zero());
  EXPECT_EQ(MarkingHash{}(m), MarkingHash{}(Marking{0, 3, 0, 1}));
}

}  // namespace
}  // namespace pnsup
