#include <gtest/gtest.h>

#include <random>

#include "closedfactors/error.hpp"
#include "closedfactors/text.hpp"
#include "support/test_support.hpp"

namespace closedfactors {
namespace {

TEST(TextTest, IngestAssignsDenseIdsInFirstOccurrenceOrder) {
  const Text t = Text::ingest("abaab");
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.sigma(), 2u);
  EXPECT_EQ(t.at(1), 0u);
  EXPECT_EQ(t.at(2), 1u);
  EXPECT_EQ(t.at(5), 1u);

  const Text u = Text::ingest("babcab");
  EXPECT_EQ(u.size(), 6u);
  EXPECT_EQ(u.sigma(), 3u);
}

TEST(TextTest, EmptyInputIsRejected) {
  try {
    Text::ingest("");
    FAIL() << "expected EmptyInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
}

TEST(TextTest, AppendSentinel) {
  const Text t = append_sentinel(Text::ingest("ababcabcac"));
  EXPECT_EQ(t.size(), 11u);
  EXPECT_EQ(t.raw_size(), 10u);
  EXPECT_EQ(t.at(11), t.sentinel());
  EXPECT_EQ(t.decode(), "ababcabcac");
  EXPECT_EQ(t.decode(Window{1, 11}), "ababcabcac$");

  const Text a = append_sentinel(Text::ingest("a"));
  EXPECT_EQ(a.size(), 2u);

  // Dense-id rule forces a third id for the sentinel.
  const Text b = append_sentinel(Text::ingest("abaab"));
  EXPECT_EQ(b.sigma(), 3u);
  EXPECT_EQ(b.sentinel(), 2u);
}

TEST(TextTest, SentinelFreezesTheText) {
  Text t = Text::ingest("ab");
  t.append_sentinel();
  EXPECT_THROW(t.append_sentinel(), Error);
  EXPECT_THROW(t.push_back('c'), Error);
  EXPECT_THROW(Text::ingest("ab").sentinel(), Error);
}

TEST(TextTest, OneBasedAccessIsBoundsChecked) {
  const Text t = Text::ingest("xyz");
  EXPECT_THROW(t.at(0), Error);
  EXPECT_THROW(t.at(4), Error);
  EXPECT_EQ(t.lookup('y'), Symbol{1});
  EXPECT_FALSE(t.lookup('q').has_value());
}

TEST(TextTest, RoundTripAndDensity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> len(1, 100);
    std::string bytes(static_cast<std::size_t>(len(rng)), '\0');
    std::uniform_int_distribution<int> byte(0, 255);
    for (char& c : bytes) c = static_cast<char>(byte(rng));
    Text t = Text::ingest(bytes);
    EXPECT_EQ(t.decode(), bytes);
    Symbol max_id = 0;
    for (Symbol s : t.symbols()) max_id = std::max(max_id, s);
    EXPECT_EQ(max_id + 1, t.sigma());
    t.append_sentinel();
    EXPECT_EQ(t.decode(), bytes);
    EXPECT_EQ(t.sentinel(), max_id + 1);
  }
}

TEST(TextTest, StreamingPushMatchesIngest) {
  Text streamed;
  for (char c : std::string("mississippi")) streamed.push_back(static_cast<unsigned char>(c));
  const Text batch = Text::ingest("mississippi");
  EXPECT_TRUE(std::equal(streamed.symbols().begin(), streamed.symbols().end(),
                         batch.symbols().begin(), batch.symbols().end()));
}

TEST(WindowTest, EmptyEncoding) {
  constexpr Window w{4, 3};
  static_assert(w.empty());
  static_assert(w.length() == 0);
  EXPECT_EQ((Window{2, 5}).length(), 4u);
}

}  // namespace
}  // namespace closedfactors
