#include <gtest/gtest.h>

#include <algorithm>

#include "closedfactors/oracle.hpp"
#include "support/test_support.hpp"

namespace closedfactors::oracle {
namespace {

using Occ = std::vector<std::size_t>;

TEST(OracleTest, Occurrences) {
  EXPECT_EQ(occurrences("abaab", "ab"), (Occ{1, 4}));
  EXPECT_EQ(occurrences("abaab", "a"), (Occ{1, 3, 4}));
  EXPECT_EQ(occurrences("abaab", ""), (Occ{1, 2, 3, 4, 5, 6}));
}

TEST(OracleTest, LongestBorder) {
  EXPECT_EQ(longest_border("abaab"), "ab");
  EXPECT_EQ(longest_border("ab"), "");
  EXPECT_EQ(longest_border("aabaa"), "aa");
}

TEST(OracleTest, IsClosed) {
  EXPECT_TRUE(is_closed("abaab"));
  EXPECT_TRUE(is_closed("a"));
  EXPECT_FALSE(is_closed("ab"));
  // Longest border "a" occurs three times.
  EXPECT_FALSE(is_closed("aaba"));
}

TEST(OracleTest, LongestRepeatingSuffix) {
  EXPECT_EQ(lrs("babcab"), "ab");
  EXPECT_EQ(lrs("ab"), "");
  EXPECT_EQ(lrs("abaab"), "ab");
}

TEST(OracleTest, DistinctClosedFactors) {
  const auto set = distinct_closed_factors(to_symbols("abaab"));
  const FactorSet expected = {to_symbols("a"),   to_symbols("b"),
                              to_symbols("aa"),  to_symbols("aba"),
                              to_symbols("baab"), to_symbols("abaab")};
  EXPECT_EQ(set, expected);
  EXPECT_EQ(distinct_closed_factors(to_symbols("a")).size(), 1u);
  EXPECT_EQ(distinct_closed_factors(to_symbols("ab")).size(), 2u);
}

TEST(OracleTest, ClosedOccurrences) {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(closed_occurrences(to_symbols("aa")), (Pairs{{1, 1}, {2, 2}, {1, 2}}));
  EXPECT_EQ(closed_occurrences(to_symbols("ab")), (Pairs{{1, 1}, {2, 2}}));
  EXPECT_EQ(closed_occurrences(to_symbols("a")), (Pairs{{1, 1}}));
}

TEST(OracleProperty, UniqueVersusRepeating) {
  testing::for_each_string(3, 6, [](const std::string& s) {
    const auto sym = to_symbols(s);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j <= s.size(); ++j) {
        const auto occ = occurrences(s, s.substr(i, j - i));
        ASSERT_GE(occ.size(), 1u);
        ASSERT_TRUE(std::find(occ.begin(), occ.end(), i + 1) != occ.end());
      }
  });
}

TEST(OracleProperty, LongestBorderIsMaximal) {
  testing::for_each_string(2, 9, [](const std::string& s) {
    const std::string b = longest_border(s);
    ASSERT_LT(b.size(), s.size());
    ASSERT_EQ(s.substr(0, b.size()), b);
    ASSERT_EQ(s.substr(s.size() - b.size()), b);
    for (std::size_t len = b.size() + 1; len < s.size(); ++len)
      ASSERT_NE(s.substr(0, len), s.substr(s.size() - len)) << s;
  });
}

// Distinct closed suffixes of one string have distinct longest borders.
TEST(OracleProperty, ClosedSuffixBordersAreDistinct) {
  testing::for_each_string(3, 8, [](const std::string& s) {
    std::vector<std::size_t> borders;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string suffix = s.substr(i);
      if (is_closed(suffix)) borders.push_back(longest_border(suffix).size());
    }
    std::sort(borders.begin(), borders.end());
    ASSERT_TRUE(std::adjacent_find(borders.begin(), borders.end()) == borders.end()) << s;
  });
}

TEST(OracleProperty, SetMatchesPerFactorTest) {
  testing::for_each_string(2, 8, [](const std::string& s) {
    FactorSet expected;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j <= s.size(); ++j)
        if (is_closed(s.substr(i, j - i))) expected.insert(to_symbols(s.substr(i, j - i)));
    ASSERT_EQ(distinct_closed_factors(to_symbols(s)), expected) << s;
  });
}

}  // namespace
}  // namespace closedfactors::oracle
