#pragma once

// Brute-force reference implementations of the word-combinatorics
// definitions. Quadratic to quartic; meant for strings of a few dozen
// symbols at most.

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "closedfactors/text.hpp"

namespace closedfactors::oracle {

using SymbolString = std::vector<Symbol>;
/// Distinct factors, deduplicated by content.
using FactorSet = std::set<SymbolString>;

/// 1-based starting positions of `pattern` in `s`. The empty pattern
/// occurs at all |s|+1 positions.
std::vector<std::size_t> occurrences(std::span<const Symbol> s,
                                     std::span<const Symbol> pattern);
std::vector<std::size_t> occurrences(std::string_view s, std::string_view pattern);

std::size_t longest_border_length(std::span<const Symbol> s);
std::string longest_border(std::string_view s);

bool is_closed(std::span<const Symbol> s);
bool is_closed(std::string_view s);

std::size_t lrs_length(std::span<const Symbol> s);
std::string lrs(std::string_view s);

FactorSet distinct_closed_factors(std::span<const Symbol> s);
FactorSet distinct_closed_factors(const Text& t);

/// Every (start, end) pair, 1-based, with s[start..end] closed; sorted by
/// end, then by decreasing start.
std::vector<std::pair<std::size_t, std::size_t>> closed_occurrences(
    std::span<const Symbol> s);
std::vector<std::pair<std::size_t, std::size_t>> closed_occurrences(const Text& t);

/// Bytes reinterpreted as symbols; closedness does not depend on id choice.
SymbolString to_symbols(std::string_view s);

}  // namespace closedfactors::oracle
