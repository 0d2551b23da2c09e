#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "closedfactors/closed_counter.hpp"
#include "closedfactors/error.hpp"
#include "closedfactors/oracle.hpp"
#include "support/test_support.hpp"

namespace closedfactors {
namespace {

std::vector<std::uint64_t> ds(const CountReport& r) {
  std::vector<std::uint64_t> out;
  for (const auto& s : *r.per_step) out.push_back(s.d);
  return out;
}

TEST(ClosedCounterTest, WorkedExample) {
  const auto r = count_online("abaab", {.record_steps = true});
  EXPECT_EQ(r.total, 6u);
  EXPECT_EQ(ds(r), (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(r.sum_t, 4u);
  EXPECT_EQ(r.sum_z, 0u);
  EXPECT_EQ(r.j_set_size, 3u);
  EXPECT_EQ(r.n - r.j_set_size, 2u);

  const auto off = count_offline(Text::ingest("abaab"), {.record_steps = true});
  EXPECT_EQ(off.total, 6u);
  EXPECT_EQ(*off.per_step, *r.per_step);
}

TEST(ClosedCounterTest, SmallExamples) {
  EXPECT_EQ(count_online("a").total, 1u);
  EXPECT_EQ(count_online("abc").total, 3u);
  EXPECT_EQ(count_online("aaaa").total, 4u);
  EXPECT_EQ(count_offline(Text::ingest("a")).total, 1u);
  const std::uint64_t babcab = oracle::distinct_closed_factors(Text::ingest("babcab")).size();
  EXPECT_EQ(count_online("babcab").total, babcab);
  EXPECT_EQ(count_offline(Text::ingest("babcab")).total, babcab);
}

TEST(ClosedCounterTest, EmptyInput) {
  std::istringstream empty;
  for (auto run : std::vector<std::function<void()>>{
           [] { count_online(std::string_view{}); },
           [&] { count_online(empty); },
           [] { OnlineCounter().report(); },
       }) {
    try {
      run();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    }
  }
}

TEST(ClosedCounterTest, StreamingMatchesBatch) {
  std::istringstream in("abracadabra");
  OnlineCounter counter;
  std::uint64_t total = 0;
  for (char c : std::string("abracadabra")) total += counter.push(static_cast<unsigned char>(c)).d;
  EXPECT_EQ(counter.report().total, total);
  EXPECT_EQ(count_online(in).total, total);
  EXPECT_EQ(count_offline(append_sentinel(Text::ingest("abracadabra"))).total, total);
}

// Per-step t and z against the oracle, and the decomposition identity.
TEST(ClosedCounterProperty, StepsMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string s = testing::random_string(rng, 1 + rng() % 40, 1 + trial % 4);
    const auto sym = oracle::to_symbols(s);
    const auto on = count_online(s, {.record_steps = true});
    const auto off = count_offline(Text::ingest(s), {.record_steps = true});
    ASSERT_EQ(*on.per_step, *off.per_step);
    for (const auto& st : *on.per_step) {
      const std::span<const Symbol> prefix(sym.data(), st.j);
      const std::size_t t = oracle::lrs_length(prefix);
      ASSERT_EQ(st.t_len, t);
      if (t > 0) ASSERT_EQ(st.z_len, oracle::lrs_length(prefix.last(t)));
    }
    ASSERT_EQ(on.total, on.sum_t - on.sum_z + on.n - on.j_set_size);
    ASSERT_EQ(on.total, oracle::distinct_closed_factors(sym).size()) << s;
    ASSERT_LE(on.window_ops, 2 * on.n);
    ASSERT_GE(on.total, 1u);
    ASSERT_LE(on.total, on.n * (on.n + 1) / 2);
  }
}

TEST(ClosedCounterTest, IntegerAlphabet) {
  std::vector<std::uint32_t> values(1000);
  for (std::uint32_t k = 0; k < values.size(); ++k) values[k] = k;
  const Text t = Text::from_integers(values);
  EXPECT_EQ(count_online(t).total, 1000u);
  EXPECT_EQ(count_offline(t).total, 1000u);
}

}  // namespace
}  // namespace closedfactors
