#pragma once

#include <cstddef>
#include <string>

#include "closedfactors/suffix_tree.hpp"
#include "closedfactors/text.hpp"

namespace closedfactors {

/// Suffix tree of a variable-width window T[i..j] that slides left to right
/// over a shared text. Both operations run in amortized O(log sigma).
///
/// The tree holds O(W) nodes for a maximum window width W; the text buffer
/// itself is owned by the caller and keeps the full history.
class SlidingSuffixTree {
 public:
  explicit SlidingSuffixTree(const Text& text)
      : tree_(text, SuffixTree::Mode::Sliding) {}

  /// Extends the window by the next text symbol; returns |lrs(window)|.
  std::size_t append_right() { return tree_.extend(); }

  /// Same, but checks that the next text symbol is `symbol`. Throws
  /// Error(PastEnd) if the text has no next symbol or it differs.
  std::size_t append_right(Symbol symbol);

  /// Drops the leftmost window symbol; returns |lrs(window)|. Throws
  /// Error(EmptyWindow) on an empty window.
  std::size_t delete_left() {
    tree_.pop_front();
    return tree_.lrs_len();
  }

  std::size_t lrs_len() const noexcept { return tree_.lrs_len(); }
  Window window() const noexcept { return tree_.window(); }
  std::size_t width() const noexcept { return window().length(); }

  std::string canonical() const { return tree_.canonical(); }
  std::size_t node_count() const noexcept { return tree_.node_count(); }
  const EditStats& stats() const noexcept { return tree_.stats(); }
  const SuffixTree& tree() const noexcept { return tree_; }

 private:
  SuffixTree tree_;
};

}  // namespace closedfactors
