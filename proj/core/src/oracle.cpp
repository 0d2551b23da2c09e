#include "closedfactors/oracle.hpp"

#include <algorithm>

namespace closedfactors::oracle {
namespace {

bool matches_at(std::span<const Symbol> s, std::size_t at,
                std::span<const Symbol> pattern) {
  return at + pattern.size() <= s.size() &&
         std::equal(pattern.begin(), pattern.end(), s.begin() + at);
}

// Stops counting at `cap`.
std::size_t count_occurrences(std::span<const Symbol> s, std::span<const Symbol> pattern,
                              std::size_t cap) {
  std::size_t count = 0;
  for (std::size_t at = 0; at + pattern.size() <= s.size() && count < cap; ++at)
    if (matches_at(s, at, pattern)) ++count;
  return count;
}

}  // namespace

SymbolString to_symbols(std::string_view s) {
  SymbolString out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<unsigned char>(c));
  return out;
}

std::vector<std::size_t> occurrences(std::span<const Symbol> s,
                                     std::span<const Symbol> pattern) {
  std::vector<std::size_t> out;
  for (std::size_t at = 0; at + pattern.size() <= s.size(); ++at)
    if (matches_at(s, at, pattern)) out.push_back(at + 1);
  return out;
}

std::vector<std::size_t> occurrences(std::string_view s, std::string_view pattern) {
  return occurrences(to_symbols(s), to_symbols(pattern));
}

std::size_t longest_border_length(std::span<const Symbol> s) {
  for (std::size_t len = s.empty() ? 0 : s.size() - 1; len > 0; --len)
    if (std::equal(s.begin(), s.begin() + len, s.end() - len)) return len;
  return 0;
}

std::string longest_border(std::string_view s) {
  const auto sym = to_symbols(s);
  return std::string(s.substr(0, longest_border_length(sym)));
}

bool is_closed(std::span<const Symbol> s) {
  if (s.size() == 1) return true;
  // Any border, including the empty one, qualifies if it occurs exactly twice.
  for (std::size_t len = 0; len < s.size(); ++len) {
    if (!std::equal(s.begin(), s.begin() + len, s.end() - len)) continue;
    if (count_occurrences(s, s.subspan(0, len), 3) == 2) return true;
  }
  return false;
}

bool is_closed(std::string_view s) { return is_closed(to_symbols(s)); }

std::size_t lrs_length(std::span<const Symbol> s) {
  for (std::size_t len = s.size(); len > 0; --len)
    if (count_occurrences(s, s.subspan(s.size() - len), 2) >= 2) return len;
  return 0;
}

std::string lrs(std::string_view s) {
  const auto sym = to_symbols(s);
  const std::size_t len = lrs_length(sym);
  return std::string(s.substr(s.size() - len));
}

FactorSet distinct_closed_factors(std::span<const Symbol> s) {
  FactorSet seen;
  FactorSet closed;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j <= s.size(); ++j) {
      SymbolString factor(s.begin() + i, s.begin() + j);
      if (!seen.insert(factor).second) continue;
      if (is_closed(factor)) closed.insert(std::move(factor));
    }
  }
  return closed;
}

FactorSet distinct_closed_factors(const Text& t) {
  return distinct_closed_factors(t.symbols().first(t.raw_size()));
}

std::vector<std::pair<std::size_t, std::size_t>> closed_occurrences(
    std::span<const Symbol> s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t end = 1; end <= s.size(); ++end)
    for (std::size_t start = end; start >= 1; --start)
      if (is_closed(s.subspan(start - 1, end - start + 1)))
        out.emplace_back(start, end);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> closed_occurrences(const Text& t) {
  return closed_occurrences(t.symbols().first(t.raw_size()));
}

}  // namespace closedfactors::oracle
