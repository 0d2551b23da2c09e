#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "closedfactors/static_index.hpp"
#include "closedfactors/text.hpp"

namespace closedfactors {

/// Occurrence T[start..end] (1-based, inclusive) of a closed factor, with
/// the length of its longest border (0 for single symbols).
struct ClosedFactor {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t border_len = 0;

  std::size_t length() const noexcept { return end - start + 1; }
  friend bool operator==(const ClosedFactor&, const ClosedFactor&) = default;
};

using FactorSink = std::function<void(const ClosedFactor&)>;

/// bits[i] = 1 iff s[i..] is closed (0-based i). Linear time. Throws
/// Error(EmptyInput) on an empty string.
std::vector<bool> oc_array(std::span<const Symbol> s);

/// Every occurrence of a closed factor, ordered by end position, then by
/// increasing border length. Theta(n^2) time, O(n) extra space.
void enumerate_occurrences(const Text& text, const FactorSink& sink);
std::vector<ClosedFactor> enumerate_occurrences(const Text& text);

/// One occurrence per distinct closed factor: the one ending first, paired
/// through the static index with the nearest earlier occurrence of its
/// border. Ordered by end position, then by increasing border length.
/// O(n log n + output log n) time.
void enumerate_distinct(const StaticIndex& index, const FactorSink& sink);
void enumerate_distinct(const Text& text, const FactorSink& sink);
std::vector<ClosedFactor> enumerate_distinct(const Text& text);

}  // namespace closedfactors
