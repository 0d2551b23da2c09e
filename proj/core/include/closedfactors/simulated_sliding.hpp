#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "closedfactors/static_index.hpp"
#include "closedfactors/suffix_tree.hpp"
#include "closedfactors/text.hpp"

namespace closedfactors {

/// Suffix tree of a window T[i..j] sliding over a fixed text T, simulated
/// against the static tree of T.
///
/// Every small internal node is linked to the big node spelling the same
/// string, every small leaf to the big leaf of its suffix, and every small
/// edge to the big edge whose label starts with the same symbol. The big
/// edge is identified by its lower node. A reverse table, indexed by big
/// node, tells in O(1) whether a big edge is linked and to which small edge.
///
/// Descent never consults the small tree's child lists: the child of u
/// toward T[s..] is reverse_link(waq(leaf_T(s), strlen(u) + 1)). Edge labels
/// are read through the big tree too, so no label ever needs re-anchoring
/// when the window moves. Suffix links stay local to the small tree.
class LinkedWindowTree {
 public:
  /// `big` must outlive the tree.
  explicit LinkedWindowTree(const StaticIndex& big);

  /// Extends the window by the next text symbol; returns |lrs(window)|.
  /// Throws Error(PastEnd) when the window already ends at the text end.
  std::size_t append_right();
  /// Same, checking that the next symbol is `symbol`.
  std::size_t append_right(Symbol symbol);
  /// Drops the leftmost window symbol; returns |lrs(window)|. Throws
  /// Error(EmptyWindow) on an empty window.
  std::size_t delete_left();

  std::size_t lrs_len() const noexcept { return lrs_; }
  Window window() const noexcept { return Window{win_start_ + std::size_t{1}, end_}; }
  std::size_t width() const noexcept { return end_ - win_start_; }
  const StaticIndex& big() const noexcept { return *big_; }

  NodeId root() const noexcept { return 0; }
  bool is_live(NodeId v) const { return v < nodes_.size() && nodes_[v].depth != kFree; }
  bool is_leaf(NodeId v) const { return nodes_[v].depth == kLeaf; }
  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  std::size_t strlen(NodeId v) const { return depth(v); }
  /// Unordered; kept only for removal, merging and serialization.
  std::span<const NodeId> children(NodeId v) const { return children_[v]; }
  std::size_t node_count() const noexcept { return nodes_.size() - free_.size(); }

  /// Big node spelling the same string (root, internal nodes) or the big
  /// leaf of the same suffix (leaves).
  NodeId linked_node(NodeId v) const;
  /// Big node whose incoming edge the incoming edge of `v` is linked to.
  NodeId linked_edge(NodeId v) const { return nodes_[v].big_edge; }
  /// Small node whose incoming edge is linked to the incoming edge of big
  /// node `x`, or kNoNode.
  NodeId reverse_link(NodeId x) const { return reverse_link_[x]; }

  const EditStats& stats() const noexcept { return stats_; }
  std::uint64_t waq_queries() const noexcept { return waqs_; }

  /// Same format as SuffixTree::canonical().
  std::string canonical() const;
  /// Structural and linkage invariants; empty string when they hold.
  std::string validate() const;

 private:
  static constexpr std::uint32_t kLeaf = 0xFFFFFFFFu;
  static constexpr std::uint32_t kFree = kLeaf - 1;

  struct Node {
    NodeId parent;
    std::uint32_t depth;  // kLeaf for leaves
    std::uint32_t key;    // leaf: suffix start; internal: linked big node
    NodeId link;
    NodeId big_edge;
  };

  Symbol sym(std::uint32_t i) const { return big_->text().symbols()[i]; }
  std::uint32_t depth(NodeId v) const {
    return nodes_[v].depth == kLeaf ? end_ - nodes_[v].key : nodes_[v].depth;
  }
  // Start of a text occurrence of the string spelled by v.
  std::uint32_t base(NodeId v) const {
    return nodes_[v].depth == kLeaf ? nodes_[v].key : big_->witness0(nodes_[v].key);
  }
  std::uint32_t edge_length(NodeId v) const { return depth(v) - nodes_[nodes_[v].parent].depth; }
  NodeId big_node_of(NodeId v) const {
    return nodes_[v].depth == kLeaf ? big_->leaf_of0(nodes_[v].key) : nodes_[v].key;
  }
  NodeId waq(NodeId u, std::uint32_t t) {
    ++waqs_;
    return big_->waq0(u, t);
  }
  // Big edge leaving the node for T[s..s+d) toward T[s+d].
  NodeId big_edge_toward(std::uint32_t s, std::uint32_t d) { return waq(big_->leaf_of0(s), d + 1); }

  NodeId new_node(Node n);
  void free_node(NodeId v);
  void link_edge(NodeId v, NodeId x);
  void remove_child(NodeId u, NodeId child);
  void replace_child(NodeId u, NodeId old_child, NodeId new_child);
  NodeId split(NodeId u, NodeId child, std::uint32_t offset, std::uint32_t start);
  void add_leaf(NodeId u, std::uint32_t start, NodeId edge);
  void merge_into_child(NodeId p);
  void descend(std::uint32_t str_start, std::uint32_t len);
  void shorten(std::uint32_t str_start);
  std::vector<Symbol> spell(NodeId v) const;
  std::vector<Symbol> active_string() const;
  void canonical_rec(NodeId v, std::string& out) const;

  const StaticIndex* big_;
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> free_;
  std::vector<NodeId> reverse_link_;
  std::deque<NodeId> leaf_at_;  // starts in [win_start_, end_ - lrs_)

  std::uint32_t win_start_ = 0;
  std::uint32_t end_ = 0;
  std::uint32_t lrs_ = 0;
  NodeId active_node_ = 0;
  NodeId active_child_ = kNoNode;
  std::uint32_t active_len_ = 0;

  EditStats stats_;
  std::uint64_t waqs_ = 0;
};

}  // namespace closedfactors
