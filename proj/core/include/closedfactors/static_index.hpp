#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "closedfactors/suffix_tree.hpp"
#include "closedfactors/text.hpp"
#include "closedfactors/wavelet_matrix.hpp"

namespace closedfactors {

/// Position of a factor in the static tree: `offset` symbols down the edge
/// into `node`. offset == strlen(node) - strlen(parent(node)) means the
/// factor ends exactly at `node`.
struct Locus {
  NodeId node = 0;
  std::size_t offset = 0;

  friend bool operator==(const Locus&, const Locus&) = default;
};

/// Finalized, immutable suffix tree of a sentineled text, with weighted
/// ancestor queries and range predecessor queries over the leaf sequence.
///
/// Nodes are numbered in preorder of the edge-sorted tree (root = 0), so the
/// leaves of a subtree occupy a contiguous block of leaf ranks. Weighted
/// ancestor queries use a heavy-path decomposition with binary search over
/// path weights: O(log n) per query. Range predecessor uses a wavelet matrix
/// over suffix starts in leaf order: O(log n) per query.
///
/// Positions and leaf ranks in the public API are 1-based.
class StaticIndex {
 public:
  /// Throws Error(SentinelMissing) unless `text` ends with its sentinel.
  static StaticIndex build(const Text& text);

  const Text& text() const noexcept { return text_; }
  /// Text length including the sentinel.
  std::size_t size() const noexcept { return text_.size(); }
  std::size_t node_count() const noexcept { return parent_.size(); }
  std::size_t leaf_count() const noexcept { return leaf_order_.size(); }

  NodeId root() const noexcept { return 0; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  std::size_t strlen(NodeId v) const { return strlen_[v]; }
  bool is_leaf(NodeId v) const { return child_begin_[v] == child_begin_[v + 1]; }
  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
  }
  /// First symbol on the edge into `v` (v != root).
  Symbol edge_symbol(NodeId v) const {
    return text_.symbols()[witness_[v] + strlen_[parent_[v]]];
  }
  /// 1-based start of some suffix whose path passes through `v`.
  std::size_t witness(NodeId v) const { return witness_[v] + 1; }
  std::uint32_t witness0(NodeId v) const { return witness_[v]; }

  /// leaf_T(i): the leaf spelling T[i..n].
  NodeId leaf_of(std::size_t pos) const;
  /// Suffix start of the leaf at 1-based rank `rank` in left-to-right order.
  std::size_t leaf_at_rank(std::size_t rank) const;
  std::size_t rank_of(std::size_t pos) const;

  /// Highest ancestor of `u` (possibly u) with strlen >= t. Requires
  /// 1 <= t <= strlen(u); throws Error(OutOfRange) otherwise.
  NodeId waq(NodeId u, std::size_t t) const;

  /// Locus of T[pos..pos+len-1]; len == 0 gives the root.
  Locus locus(std::size_t pos, std::size_t len) const;

  /// Closed 1-based rank interval of the leaves below `v`.
  std::pair<std::size_t, std::size_t> subtree_leaf_range(NodeId v) const;

  /// Largest suffix start p < pos among leaves with rank in [lo, hi].
  /// Throws Error(InvalidRange) for an invalid interval.
  std::optional<std::size_t> range_predecessor(std::size_t rank_lo, std::size_t rank_hi,
                                               std::size_t pos) const;

  // Unchecked 0-based forms for the inner loops.
  NodeId leaf_of0(std::uint32_t pos0) const { return leaf_of_[pos0]; }
  NodeId waq0(NodeId u, std::uint32_t t) const;
  std::uint32_t range_lo0(NodeId v) const { return range_lo_[v]; }
  std::uint32_t range_hi0(NodeId v) const { return range_hi_[v]; }

  /// Versioned binary cache: header (magic, version, n, id count, byte table
  /// size), then the byte table, the symbols, and the tree arrays. Derived
  /// query structures are rebuilt on load.
  void save(std::ostream& out) const;
  static StaticIndex load(std::istream& in);

  static constexpr std::uint32_t kFormatVersion = 1;

 private:
  StaticIndex() = default;
  void build_derived();

  Text text_;
  // Tree in preorder; children in edge-sorted order.
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> strlen_;
  std::vector<std::uint32_t> witness_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<NodeId> child_list_;

  std::vector<NodeId> leaf_of_;            // suffix start -> leaf
  std::vector<std::uint32_t> leaf_order_;  // rank -> suffix start
  std::vector<std::uint32_t> leaf_rank_;   // suffix start -> rank
  std::vector<std::uint32_t> range_lo_;
  std::vector<std::uint32_t> range_hi_;

  // Heavy-path decomposition: each path occupies a contiguous block.
  std::vector<std::uint32_t> hld_pos_;
  std::vector<NodeId> hld_head_;
  std::vector<NodeId> hld_node_;
  std::vector<std::uint32_t> hld_weight_;

  WaveletMatrix leaf_values_;
};

}  // namespace closedfactors
