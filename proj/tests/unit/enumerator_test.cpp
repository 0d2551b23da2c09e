#include <gtest/gtest.h>

#include <set>

#include "closedfactors/closed_counter.hpp"
#include "closedfactors/enumerator.hpp"
#include "closedfactors/error.hpp"
#include "closedfactors/oracle.hpp"
#include "support/test_support.hpp"

namespace closedfactors {
namespace {

std::vector<bool> oc(std::string_view s) { return oc_array(oracle::to_symbols(s)); }

std::vector<std::pair<std::size_t, std::size_t>> spans(const std::vector<ClosedFactor>& fs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& f : fs) out.emplace_back(f.start, f.end);
  return out;
}

TEST(EnumeratorTest, OcArrayExamples) {
  EXPECT_EQ(oc("aa"), (std::vector<bool>{true, true}));
  EXPECT_EQ(oc("ab"), (std::vector<bool>{false, true}));
  EXPECT_EQ(oc("x"), (std::vector<bool>{true}));
  EXPECT_EQ(oc("aaba"), (std::vector<bool>{false, true, false, true}));
  EXPECT_THROW(oc(""), Error);
}

TEST(EnumeratorTest, OccurrenceExamples) {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(spans(enumerate_occurrences(Text::ingest("aa"))), (P{{1, 1}, {2, 2}, {1, 2}}));
  EXPECT_EQ(spans(enumerate_occurrences(Text::ingest("ab"))), (P{{1, 1}, {2, 2}}));
  EXPECT_EQ(spans(enumerate_occurrences(Text::ingest("a"))), (P{{1, 1}}));
}

TEST(EnumeratorTest, DistinctExamples) {
  using F = std::vector<ClosedFactor>;
  EXPECT_EQ(enumerate_distinct(Text::ingest("abaab")),
            (F{{1, 1, 0}, {2, 2, 0}, {1, 3, 1}, {3, 4, 1}, {2, 5, 1}, {1, 5, 2}}));
  EXPECT_EQ(enumerate_distinct(Text::ingest("a")), (F{{1, 1, 0}}));
  EXPECT_EQ(enumerate_distinct(Text::ingest("aaaa")), (F{{1, 1, 0}, {1, 2, 1}, {1, 3, 2}, {1, 4, 3}}));
}

void check_string(const std::string& s) {
  const Text t = Text::ingest(s);
  const std::vector<Symbol> sym(t.symbols().begin(), t.symbols().end());
  const auto bits = oc_array(sym);
  for (std::size_t i = 0; i < s.size(); ++i)
    ASSERT_EQ(bits[i], oracle::is_closed(std::span<const Symbol>(sym).subspan(i))) << s << " " << i;

  const auto occ = enumerate_occurrences(t);
  ASSERT_EQ(spans(occ), oracle::closed_occurrences(t)) << s;
  for (const auto& f : occ)
    ASSERT_EQ(f.border_len,
              f.length() == 1 ? 0 : oracle::longest_border_length(std::span<const Symbol>(sym).subspan(f.start - 1, f.length())));

  const auto distinct = enumerate_distinct(t);
  oracle::FactorSet got;
  for (const auto& f : distinct) {
    const std::span<const Symbol> factor = std::span<const Symbol>(sym).subspan(f.start - 1, f.length());
    ASSERT_TRUE(got.emplace(factor.begin(), factor.end()).second) << s << ": duplicate";
    if (f.border_len > 0) {
      ASSERT_TRUE(std::equal(factor.begin(), factor.begin() + f.border_len, factor.end() - f.border_len));
      ASSERT_EQ(oracle::occurrences(factor, factor.first(f.border_len)).size(), 2u);
    }
  }
  ASSERT_EQ(got, oracle::distinct_closed_factors(t)) << s;
}

TEST(EnumeratorProperty, ExhaustiveSmall) {
  testing::for_each_string(2, 10, check_string);
  testing::for_each_string(3, 6, check_string);
}

}  // namespace
}  // namespace closedfactors
