#include <gtest/gtest.h>

#include <random>

#include "closedfactors/error.hpp"
#include "closedfactors/oracle.hpp"
#include "closedfactors/sliding_suffix_tree.hpp"
#include "support/test_support.hpp"

namespace closedfactors {
namespace {

SlidingSuffixTree window_over(const Text& t, std::size_t from, std::size_t to) {
  SlidingSuffixTree tree(t);
  for (std::size_t p = 1; p <= to; ++p) tree.append_right();
  for (std::size_t p = 1; p < from; ++p) tree.delete_left();
  return tree;
}

TEST(SlidingSuffixTreeTest, AppendRight) {
  const Text t = Text::ingest("babcab");
  auto tree = window_over(t, 1, 5);
  EXPECT_EQ(tree.append_right(*t.lookup('b')), 2u);
  EXPECT_EQ(tree.window(), (Window{1, 6}));

  const Text a = Text::ingest("aa");
  SlidingSuffixTree ta(a);
  EXPECT_EQ(ta.append_right(), 0u);
  EXPECT_EQ(ta.append_right(), 1u);
  EXPECT_THROW(ta.append_right(), Error);
}

TEST(SlidingSuffixTreeTest, AppendRightChecksTheSymbol) {
  const Text t = Text::ingest("ab");
  SlidingSuffixTree tree(t);
  EXPECT_THROW(tree.append_right(*t.lookup('b')), Error);
  EXPECT_EQ(tree.append_right(*t.lookup('a')), 0u);
}

TEST(SlidingSuffixTreeTest, DeleteLeft) {
  {
    const Text t = Text::ingest("aa");
    auto tree = window_over(t, 1, 2);
    EXPECT_EQ(tree.delete_left(), 0u);
    EXPECT_EQ(tree.window(), (Window{2, 2}));
  }
  {
    const Text t = Text::ingest("abab");
    auto tree = window_over(t, 1, 4);
    EXPECT_EQ(tree.delete_left(), 1u);
  }
  {
    const Text t = Text::ingest("babcab");
    auto tree = window_over(t, 1, 6);
    EXPECT_EQ(tree.delete_left(), 2u);
    EXPECT_EQ(tree.canonical(), testing::naive_canonical("abcab"));
  }
  {
    const Text t = Text::ingest("x");
    auto tree = window_over(t, 1, 1);
    EXPECT_EQ(tree.delete_left(), 0u);
    EXPECT_TRUE(tree.window().empty());
    try {
      tree.delete_left();
      FAIL() << "expected EmptyWindow";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::EmptyWindow);
    }
  }
}

TEST(SlidingSuffixTreeTest, LrsLen) {
  const Text t = Text::ingest("babcab");
  EXPECT_EQ(window_over(t, 1, 6).lrs_len(), 2u);
  EXPECT_EQ(SlidingSuffixTree(t).lrs_len(), 0u);
  const Text u = Text::ingest("aabaa");
  EXPECT_EQ(window_over(u, 1, 5).lrs_len(), 2u);
}

TEST(SlidingSuffixTreeTest, EmptiesAndRegrows) {
  const Text t = Text::ingest("abcabcab");
  SlidingSuffixTree tree(t);
  tree.append_right();
  tree.append_right();
  tree.delete_left();
  tree.delete_left();
  EXPECT_TRUE(tree.window().empty());
  EXPECT_EQ(tree.node_count(), 1u);
  for (int k = 0; k < 6; ++k) tree.append_right();
  EXPECT_EQ(tree.window(), (Window{3, 8}));
  EXPECT_EQ(tree.lrs_len(), 3u);  // "cabcab": "cab"
  EXPECT_EQ(tree.canonical(), testing::naive_canonical("cabcab"));
}

// Random interleavings of appends and deletions, checked after every
// operation against a tree rebuilt from scratch and against the oracle.
TEST(SlidingSuffixTreeProperty, FreshBuildEquivalence) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    const int sigma = 2 + trial % 3;
    const std::string s = testing::random_string(rng, 64, sigma);
    const Text t = Text::ingest(s);
    SlidingSuffixTree tree(t);
    std::bernoulli_distribution grow(0.6);
    std::size_t max_width = 0;
    while (tree.window().end < s.size()) {
      const Window w = tree.window();
      if (w.empty() || grow(rng)) tree.append_right();
      else tree.delete_left();
      const Window now = tree.window();
      const std::string content = s.substr(now.start - 1, now.length());
      ASSERT_EQ(tree.canonical(), testing::naive_canonical(content)) << s;
      ASSERT_EQ(tree.lrs_len(), oracle::lrs_length(oracle::to_symbols(content)));
      ASSERT_EQ(tree.tree().validate(), "") << s << " window " << content;
      if (now.length() <= 1) ASSERT_EQ(tree.lrs_len(), 0u);
      max_width = std::max(max_width, now.length());
      ASSERT_LE(tree.node_count(), 2 * max_width + 1);
    }
  }
}

TEST(SlidingSuffixTreeProperty, StructuralEditsAreLinear) {
  std::mt19937_64 rng(99);
  for (int sigma : {2, 3, 8}) {
    const std::string s = testing::random_string(rng, 20000, sigma);
    const Text t = Text::ingest(s);
    SlidingSuffixTree tree(t);
    std::uint64_t ops = 0;
    std::uniform_int_distribution<int> width(0, 40);
    while (tree.window().end < s.size()) {
      const std::size_t target = static_cast<std::size_t>(width(rng));
      tree.append_right();
      ++ops;
      while (tree.width() > target) {
        tree.delete_left();
        ++ops;
      }
    }
    EXPECT_LE(tree.stats().structural(), 8 * ops);
    EXPECT_EQ(tree.tree().validate(), "");
  }
}

}  // namespace
}  // namespace closedfactors
