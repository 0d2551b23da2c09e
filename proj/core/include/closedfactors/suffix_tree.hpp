#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "closedfactors/text.hpp"

namespace closedfactors {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Locus of the longest repeating suffix. `edge_symbol` is empty when the
/// locus is exactly `node`; otherwise the locus lies `offset` symbols down
/// the edge leaving `node` that starts with `edge_symbol`.
struct ActivePoint {
  NodeId node = 0;
  std::optional<Symbol> edge_symbol;
  std::size_t offset = 0;
};

/// Counters for the amortization audits.
struct EditStats {
  std::uint64_t nodes_created = 0;
  std::uint64_t nodes_deleted = 0;
  std::uint64_t edges_created = 0;
  std::uint64_t edges_deleted = 0;
  std::uint64_t leaf_relabels = 0;
  std::uint64_t active_moves = 0;

  std::uint64_t structural() const noexcept {
    return nodes_created + nodes_deleted + edges_created + edges_deleted;
  }
  /// Creations and deletions of a node together with its incoming edge.
  std::uint64_t node_events() const noexcept { return nodes_created + nodes_deleted; }
};

/// Ukkonen suffix tree over a window of a Text, in implicit form.
///
/// The tree consumes the text left to right: `extend()` appends the next
/// unread symbol. In `Mode::Sliding` the tree also supports `pop_front()`,
/// which drops the leftmost window symbol. Edge labels are stored as
/// positions into the shared text; in sliding mode each internal node keeps a
/// witness suffix start that is re-anchored when its leaf expires, so every
/// stored position stays inside the window.
///
/// Node ids are stable for the lifetime of the node. Ids of deleted nodes are
/// recycled.
class SuffixTree {
 public:
  enum class Mode { Growing, Sliding };

  struct Child {
    Symbol symbol;
    NodeId node;
  };

  /// The tree keeps a pointer to `text`, which must outlive it and may keep
  /// growing.
  explicit SuffixTree(const Text& text, Mode mode = Mode::Growing);

  /// Reads the next symbol of the text into the tree; returns the new lrs
  /// length. Throws Error(PastEnd) when the text has no unread symbol.
  std::size_t extend();

  /// Drops the leftmost symbol of the window; sliding mode only. Throws
  /// Error(EmptyWindow) on an empty window.
  void pop_front();

  /// Consumes the rest of the text, which must end with its sentinel. After
  /// this every suffix ends at a leaf.
  void finalize();
  bool finalized() const noexcept { return finalized_; }

  std::size_t lrs_len() const noexcept { return lrs_; }
  /// 1-based start of the lrs as a suffix of the window; end + 1 if empty.
  std::size_t lrs_start() const noexcept { return end_ - lrs_ + 1; }
  ActivePoint active_point() const;
  std::vector<Symbol> active_string() const;

  /// 1-based inclusive window [start, end].
  Window window() const noexcept { return Window{win_start_ + 1, end_}; }
  Mode mode() const noexcept { return mode_; }
  const Text& text() const noexcept { return *text_; }

  NodeId root() const noexcept { return 0; }
  bool is_leaf(NodeId v) const { return nodes_[v].depth == kLeaf; }
  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  NodeId suffix_link(NodeId v) const { return nodes_[v].link; }
  /// Length of the string spelled from the root to `v`.
  std::size_t strlen(NodeId v) const;
  /// 1-based start of the suffix a leaf represents.
  std::size_t leaf_start(NodeId leaf) const { return nodes_[leaf].pos + 1; }
  /// 1-based inclusive text positions of the label on the edge into `v`.
  std::pair<std::size_t, std::size_t> edge_label(NodeId v) const;
  std::span<const Child> children(NodeId v) const { return children_[v]; }
  NodeId child(NodeId v, Symbol c) const { return find_child(v, c); }

  /// Live nodes, root included.
  std::size_t node_count() const noexcept { return nodes_.size() - free_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_; }
  /// Arena slots ever allocated.
  std::size_t capacity() const noexcept { return nodes_.size(); }
  bool is_live(NodeId v) const { return v < nodes_.size() && nodes_[v].depth != kFree; }

  const EditStats& stats() const noexcept { return stats_; }

  /// Content-only preorder serialization; children are ordered by the byte
  /// their edge starts with, so two trees over equal windows of different
  /// texts serialize identically. Format: node = '(' len ':' label child* ')'.
  std::string canonical() const;

  /// Human-readable preorder dump with (start,end) positions and labels.
  std::string dump() const;

  /// Checks structural invariants; returns an empty string when they hold,
  /// otherwise a description of the first violation.
  std::string validate() const;

 private:
  static constexpr std::uint32_t kLeaf = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kFree = kLeaf - 1;

  struct Node {
    NodeId parent;
    std::uint32_t depth;  // kLeaf for leaves
    std::uint32_t pos;    // leaf: suffix start; internal: witness suffix start
    NodeId link;
  };

  Symbol sym(std::uint32_t i) const { return text_->symbols()[i]; }
  std::uint32_t node_depth(NodeId v) const {
    return nodes_[v].depth == kLeaf ? end_ - nodes_[v].pos : nodes_[v].depth;
  }
  std::uint32_t edge_start(NodeId v) const {
    return nodes_[v].pos + nodes_[nodes_[v].parent].depth;
  }
  std::uint32_t edge_length(NodeId v) const {
    return node_depth(v) - nodes_[nodes_[v].parent].depth;
  }

  NodeId find_child(NodeId v, Symbol c) const;
  NodeId new_node(Node n);
  void free_node(NodeId v);
  NodeId split(NodeId u, NodeId child, std::uint32_t offset, std::uint32_t witness);
  void add_leaf(NodeId u, std::uint32_t start, Symbol c);
  void remove_child(NodeId u, NodeId child);
  void replace_child(NodeId u, NodeId old_child, NodeId new_child);
  void merge_into_child(NodeId p);
  void descend(std::uint32_t str_start, std::uint32_t len);
  void shorten(std::uint32_t str_start);
  void watch(std::uint32_t start, NodeId v);
  std::uint32_t fresh_witness(NodeId v, std::uint32_t expired) const;

  void canonical_rec(NodeId v, std::string& out) const;
  void dump_rec(NodeId v, int indent, std::string& out) const;
  std::string label_bytes(NodeId v) const;

  const Text* text_;
  Mode mode_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Child>> children_;
  std::vector<NodeId> free_;
  std::size_t leaves_ = 0;

  std::uint32_t win_start_ = 0;  // 0-based first window position
  std::uint32_t end_ = 0;        // one past the last consumed position
  std::uint32_t lrs_ = 0;
  NodeId active_node_ = 0;
  NodeId active_child_ = kNoNode;
  std::uint32_t active_len_ = 0;
  bool finalized_ = false;

  // Sliding mode: leaf and witness registry for starts in
  // [win_start_, end_ - lrs_), indexed by start - win_start_.
  std::deque<NodeId> leaf_at_;
  std::deque<std::vector<NodeId>> watchers_;

  EditStats stats_;
};

}  // namespace closedfactors
