#include "closedfactors/wavelet_matrix.hpp"

#include <algorithm>
#include <bit>

namespace closedfactors {

void RankBitVector::build_rank() {
  word_rank_.assign(words_.size() + 1, 0);
  for (std::size_t w = 0; w < words_.size(); ++w)
    word_rank_[w + 1] = word_rank_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
}

std::size_t RankBitVector::rank1(std::size_t i) const {
  const std::size_t w = i >> 6;
  const std::size_t r = i & 63;
  std::size_t ones = word_rank_[w];
  if (r != 0) ones += static_cast<std::size_t>(std::popcount(words_[w] & ((std::uint64_t{1} << r) - 1)));
  return ones;
}

WaveletMatrix::WaveletMatrix(std::span<const std::uint32_t> values) : size_(values.size()) {
  std::uint32_t max_value = 0;
  for (std::uint32_t v : values) max_value = std::max(max_value, v);
  bits_ = std::max(1, static_cast<int>(std::bit_width(max_value)));
  levels_.resize(static_cast<std::size_t>(bits_));
  zeros_.resize(static_cast<std::size_t>(bits_));

  std::vector<std::uint32_t> cur(values.begin(), values.end());
  std::vector<std::uint32_t> next(cur.size());
  for (int level = 0; level < bits_; ++level) {
    const int shift = bits_ - 1 - level;
    RankBitVector bv(size_);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if ((cur[i] >> shift) & 1) bv.set(i);
      else ++zeros;
    }
    bv.build_rank();
    // Stable partition: zeros first, then ones.
    std::size_t z = 0;
    std::size_t o = zeros;
    for (std::size_t i = 0; i < size_; ++i) {
      if ((cur[i] >> shift) & 1) next[o++] = cur[i];
      else next[z++] = cur[i];
    }
    levels_[static_cast<std::size_t>(level)] = std::move(bv);
    zeros_[static_cast<std::size_t>(level)] = zeros;
    cur.swap(next);
  }
}

std::uint32_t WaveletMatrix::access(std::size_t i) const {
  std::uint32_t value = 0;
  for (int level = 0; level < bits_; ++level) {
    const auto& bv = levels_[static_cast<std::size_t>(level)];
    if (bv.get(i)) {
      value |= std::uint32_t{1} << (bits_ - 1 - level);
      i = zeros_[static_cast<std::size_t>(level)] + bv.rank1(i);
    } else {
      i = bv.rank0(i);
    }
  }
  return value;
}

std::size_t WaveletMatrix::count_less(std::size_t l, std::size_t r, std::uint32_t x) const {
  if (bits_ < 32 && x >= (std::uint32_t{1} << bits_)) return r - l;
  std::size_t less = 0;
  for (int level = 0; level < bits_ && l < r; ++level) {
    const auto& bv = levels_[static_cast<std::size_t>(level)];
    const std::size_t l0 = bv.rank0(l);
    const std::size_t r0 = bv.rank0(r);
    if ((x >> (bits_ - 1 - level)) & 1) {
      less += r0 - l0;
      const std::size_t z = zeros_[static_cast<std::size_t>(level)];
      l = z + (l - l0);
      r = z + (r - r0);
    } else {
      l = l0;
      r = r0;
    }
  }
  return less;
}

std::uint32_t WaveletMatrix::kth_smallest(std::size_t l, std::size_t r, std::size_t k) const {
  std::uint32_t value = 0;
  for (int level = 0; level < bits_; ++level) {
    const auto& bv = levels_[static_cast<std::size_t>(level)];
    const std::size_t l0 = bv.rank0(l);
    const std::size_t r0 = bv.rank0(r);
    if (k < r0 - l0) {
      l = l0;
      r = r0;
    } else {
      k -= r0 - l0;
      value |= std::uint32_t{1} << (bits_ - 1 - level);
      const std::size_t z = zeros_[static_cast<std::size_t>(level)];
      l = z + (l - l0);
      r = z + (r - r0);
    }
  }
  return value;
}

std::optional<std::uint32_t> WaveletMatrix::prev_value(std::size_t l, std::size_t r,
                                                       std::uint32_t x) const {
  if (l >= r) return std::nullopt;
  const std::size_t less = count_less(l, r, x);
  if (less == 0) return std::nullopt;
  return kth_smallest(l, r, less - 1);
}

}  // namespace closedfactors
