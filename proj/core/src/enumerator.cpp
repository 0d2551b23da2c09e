#include "closedfactors/enumerator.hpp"

#include <limits>

#include "closedfactors/closed_counter.hpp"
#include "closedfactors/error.hpp"

namespace closedfactors {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Reused across the prefixes scanned by enumerate_occurrences.
struct OcScratch {
  std::vector<std::uint32_t> pi;         // pi[L]: longest border of R[0..L)
  std::vector<std::uint32_t> first_end;  // first end of a second occurrence of R[0..l)
};

// Runs KMP over R = reverse(s) and calls visit(L, b) for every closed suffix
// of s of length L, in increasing L, where b is its longest border length.
// A suffix is closed iff it is a single symbol or its longest border occurs
// exactly twice, i.e. the border re-occurs for the first time at its end.
template <class Visit>
void scan_closed_suffixes(std::span<const Symbol> s, OcScratch& w, Visit&& visit) {
  const std::size_t m = s.size();
  const auto r = [&](std::size_t k) { return s[m - 1 - k]; };
  w.pi.assign(m + 1, 0);
  w.first_end.assign(m + 1, kUnset);
  std::uint32_t k = 0;
  for (std::size_t i = 1; i < m; ++i) {
    while (k > 0 && r(i) != r(k)) k = w.pi[k];
    if (r(i) == r(k)) ++k;
    w.pi[i + 1] = k;
    // Once a length is set, its own borders have been set no later.
    for (std::uint32_t l = k; l > 0 && w.first_end[l] == kUnset; l = w.pi[l])
      w.first_end[l] = static_cast<std::uint32_t>(i);
  }
  visit(std::size_t{1}, std::size_t{0});
  for (std::size_t len = 2; len <= m; ++len) {
    const std::uint32_t b = w.pi[len];
    if (b > 0 && w.first_end[b] == len - 1) visit(len, std::size_t{b});
  }
}

}  // namespace

std::vector<bool> oc_array(std::span<const Symbol> s) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty string has no open-close array");
  std::vector<bool> bits(s.size(), false);
  OcScratch w;
  scan_closed_suffixes(s, w, [&](std::size_t len, std::size_t) { bits[s.size() - len] = true; });
  return bits;
}

void enumerate_occurrences(const Text& text, const FactorSink& sink) {
  const auto all = text.symbols().first(text.raw_size());
  OcScratch w;
  for (std::size_t q = 1; q <= all.size(); ++q) {
    scan_closed_suffixes(all.first(q), w, [&](std::size_t len, std::size_t border) {
      sink(ClosedFactor{q - len + 1, q, border});
    });
  }
}

std::vector<ClosedFactor> enumerate_occurrences(const Text& text) {
  std::vector<ClosedFactor> out;
  enumerate_occurrences(text, [&](const ClosedFactor& f) { out.push_back(f); });
  return out;
}

void enumerate_distinct(const StaticIndex& index, const FactorSink& sink) {
  count_offline(index, {}, [&](const StepRecord& step) {
    const std::size_t j = step.j;
    if (step.t_len == 0) {
      sink(ClosedFactor{j, j, 0});
      return;
    }
    for (std::size_t len = step.z_len + 1; len <= step.t_len; ++len) {
      const std::size_t s = j - len + 1;
      const Locus locus = index.locus(s, len);
      const auto [lo, hi] = index.subtree_leaf_range(locus.node);
      // The border repeats within T[1..j], so an earlier occurrence exists.
      const auto p = index.range_predecessor(lo, hi, s);
      sink(ClosedFactor{*p, j, len});
    }
  });
}

void enumerate_distinct(const Text& text, const FactorSink& sink) {
  if (text.raw_size() == 0) throw Error(ErrorCode::EmptyInput, "input text is empty");
  if (text.has_sentinel()) return enumerate_distinct(StaticIndex::build(text), sink);
  enumerate_distinct(StaticIndex::build(append_sentinel(text)), sink);
}

std::vector<ClosedFactor> enumerate_distinct(const Text& text) {
  std::vector<ClosedFactor> out;
  enumerate_distinct(text, [&](const ClosedFactor& f) { out.push_back(f); });
  return out;
}

}  // namespace closedfactors
