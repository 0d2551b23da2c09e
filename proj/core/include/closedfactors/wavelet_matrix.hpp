#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace closedfactors {

/// Plain bit vector with O(1) rank over 64-bit words.
class RankBitVector {
 public:
  RankBitVector() = default;
  explicit RankBitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void build_rank();

  /// Ones in [0, i).
  std::size_t rank1(std::size_t i) const;
  std::size_t rank0(std::size_t i) const { return i - rank1(i); }
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> word_rank_;
};

/// Wavelet matrix over a sequence of unsigned integers; O(log max) for
/// counting, selection, and predecessor queries over an index range.
class WaveletMatrix {
 public:
  WaveletMatrix() = default;
  explicit WaveletMatrix(std::span<const std::uint32_t> values);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t access(std::size_t i) const;

  /// Number of values < x among positions [l, r).
  std::size_t count_less(std::size_t l, std::size_t r, std::uint32_t x) const;
  /// k-th smallest (0-based) value among positions [l, r); requires k < r - l.
  std::uint32_t kth_smallest(std::size_t l, std::size_t r, std::size_t k) const;
  /// Largest value < x among positions [l, r).
  std::optional<std::uint32_t> prev_value(std::size_t l, std::size_t r,
                                          std::uint32_t x) const;

 private:
  std::size_t size_ = 0;
  int bits_ = 0;
  std::vector<RankBitVector> levels_;
  std::vector<std::size_t> zeros_;
};

}  // namespace closedfactors
