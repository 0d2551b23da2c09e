#include "closedfactors/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "closedfactors/error.hpp"

namespace closedfactors {

SuffixTree::SuffixTree(const Text& text, Mode mode) : text_(&text), mode_(mode) {
  nodes_.push_back(Node{kNoNode, 0, 0, kNoNode});
  children_.emplace_back();
}

std::size_t SuffixTree::strlen(NodeId v) const { return node_depth(v); }

std::pair<std::size_t, std::size_t> SuffixTree::edge_label(NodeId v) const {
  if (v == root()) return {1, 0};
  const std::uint32_t start = edge_start(v);
  return {start + 1, start + edge_length(v)};
}

NodeId SuffixTree::find_child(NodeId v, Symbol c) const {
  const auto& kids = children_[v];
  if (kids.size() <= 8) {
    for (const Child& k : kids)
      if (k.symbol == c) return k.node;
    return kNoNode;
  }
  auto it = std::lower_bound(kids.begin(), kids.end(), c,
                             [](const Child& k, Symbol s) { return k.symbol < s; });
  return it != kids.end() && it->symbol == c ? it->node : kNoNode;
}

NodeId SuffixTree::new_node(Node n) {
  ++stats_.nodes_created;
  if (!free_.empty()) {
    const NodeId id = free_.back();
    free_.pop_back();
    nodes_[id] = n;
    children_[id].clear();
    return id;
  }
  nodes_.push_back(n);
  children_.emplace_back();
  return static_cast<NodeId>(nodes_.size() - 1);
}

void SuffixTree::free_node(NodeId v) {
  ++stats_.nodes_deleted;
  if (nodes_[v].depth == kLeaf) --leaves_;
  nodes_[v].depth = kFree;
  nodes_[v].link = kNoNode;
  children_[v].clear();
  children_[v].shrink_to_fit();
  free_.push_back(v);
}

void SuffixTree::remove_child(NodeId u, NodeId child) {
  ++stats_.edges_deleted;
  auto& kids = children_[u];
  kids.erase(std::find_if(kids.begin(), kids.end(),
                          [child](const Child& k) { return k.node == child; }));
}

void SuffixTree::replace_child(NodeId u, NodeId old_child, NodeId new_child) {
  for (Child& k : children_[u]) {
    if (k.node == old_child) {
      k.node = new_child;
      return;
    }
  }
}

NodeId SuffixTree::split(NodeId u, NodeId child, std::uint32_t offset,
                         std::uint32_t witness) {
  const Symbol below = sym(edge_start(child) + offset);
  const NodeId mid =
      new_node(Node{u, nodes_[u].depth + offset, witness, kNoNode});
  ++stats_.edges_created;
  replace_child(u, child, mid);
  nodes_[child].parent = mid;
  children_[mid].push_back(Child{below, child});
  return mid;
}

void SuffixTree::add_leaf(NodeId u, std::uint32_t start, Symbol c) {
  const NodeId leaf = new_node(Node{u, kLeaf, start, kNoNode});
  ++stats_.edges_created;
  ++leaves_;
  auto& kids = children_[u];
  auto it = std::lower_bound(kids.begin(), kids.end(), c,
                             [](const Child& k, Symbol s) { return k.symbol < s; });
  kids.insert(it, Child{c, leaf});
  if (mode_ == Mode::Sliding) {
    leaf_at_.push_back(leaf);
    watchers_.emplace_back();
    if (u != root()) {
      nodes_[u].pos = start;
      watch(start, u);
    }
  }
}

void SuffixTree::watch(std::uint32_t start, NodeId v) {
  watchers_[start - win_start_].push_back(v);
}

void SuffixTree::descend(std::uint32_t str_start, std::uint32_t len) {
  for (;;) {
    const std::uint32_t d = nodes_[active_node_].depth;
    if (len == d) {
      active_child_ = kNoNode;
      active_len_ = 0;
      return;
    }
    const NodeId ch = find_child(active_node_, sym(str_start + d));
    ++stats_.active_moves;
    if (nodes_[ch].depth == kLeaf || len - d < edge_length(ch)) {
      active_child_ = ch;
      active_len_ = len - d;
      return;
    }
    active_node_ = ch;
  }
}

void SuffixTree::shorten(std::uint32_t str_start) {
  if (active_node_ != root()) active_node_ = nodes_[active_node_].link;
  descend(str_start, lrs_);
}

std::size_t SuffixTree::extend() {
  if (end_ >= text_->size())
    throw Error(ErrorCode::PastEnd, "no unread symbol left in the text");
  const std::uint32_t j = end_;
  const Symbol c = sym(j);
  ++end_;
  NodeId pending = kNoNode;
  for (;;) {
    const std::uint32_t start = j - lrs_;
    if (active_len_ == 0) {
      const NodeId u = active_node_;
      const NodeId ch = find_child(u, c);
      if (ch != kNoNode) {
        if (pending != kNoNode) nodes_[pending].link = u;
        ++lrs_;
        ++stats_.active_moves;
        if (nodes_[ch].depth != kLeaf && edge_length(ch) == 1) {
          active_node_ = ch;
        } else {
          active_child_ = ch;
          active_len_ = 1;
        }
        return lrs_;
      }
      add_leaf(u, start, c);
      if (pending != kNoNode) {
        nodes_[pending].link = u;
        pending = kNoNode;
      }
    } else {
      const NodeId ch = active_child_;
      if (sym(edge_start(ch) + active_len_) == c) {
        ++lrs_;
        ++active_len_;
        ++stats_.active_moves;
        if (nodes_[ch].depth != kLeaf && active_len_ == edge_length(ch)) {
          active_node_ = ch;
          active_child_ = kNoNode;
          active_len_ = 0;
        }
        return lrs_;
      }
      const NodeId mid = split(active_node_, ch, active_len_, start);
      add_leaf(mid, start, c);
      if (pending != kNoNode) nodes_[pending].link = mid;
      pending = mid;
    }
    if (lrs_ == 0) return 0;
    --lrs_;
    shorten(start + 1);
  }
}

void SuffixTree::merge_into_child(NodeId p) {
  const NodeId c = children_[p].front().node;
  const NodeId g = nodes_[p].parent;
  replace_child(g, p, c);
  nodes_[c].parent = g;
  ++stats_.edges_deleted;
  if (active_node_ == p) {
    const std::uint32_t above = nodes_[p].depth - nodes_[g].depth;
    active_node_ = g;
    active_child_ = c;
    active_len_ += above;
  } else if (active_child_ == p) {
    active_child_ = c;
  }
  free_node(p);
}

std::uint32_t SuffixTree::fresh_witness(NodeId v, std::uint32_t expired) const {
  // At most one child subtree holds the expired leaf, so two children always
  // yield a live witness.
  std::uint32_t best = expired;
  const auto& kids = children_[v];
  for (std::size_t k = 0; k < kids.size() && k < 2; ++k) {
    const std::uint32_t w = nodes_[kids[k].node].pos;
    if (w != expired && (best == expired || w > best)) best = w;
  }
  return best;
}

void SuffixTree::pop_front() {
  if (mode_ != Mode::Sliding)
    throw std::logic_error("pop_front requires a sliding-mode tree");
  if (win_start_ == end_) throw Error(ErrorCode::EmptyWindow, "window is empty");

  const std::uint32_t expired = win_start_;
  const NodeId leaf = leaf_at_.front();
  const NodeId p = nodes_[leaf].parent;
  std::vector<NodeId> watching = std::move(watchers_.front());
  leaf_at_.pop_front();
  watchers_.pop_front();
  ++win_start_;

  if (active_len_ > 0 && active_child_ == leaf) {
    // The lrs occurred only here and as a suffix; it becomes unique and takes
    // over the departing leaf.
    const std::uint32_t s = end_ - lrs_;
    nodes_[leaf].pos = s;
    leaf_at_.push_back(leaf);
    watchers_.emplace_back();
    for (NodeId v : watching) {
      if (is_live(v) && nodes_[v].depth != kLeaf && nodes_[v].pos == expired) {
        nodes_[v].pos = s;
        watchers_.back().push_back(v);
      }
    }
    ++stats_.leaf_relabels;
    --lrs_;
    shorten(s + 1);
    return;
  }

  remove_child(p, leaf);
  free_node(leaf);
  if (p != root() && children_[p].size() == 1) merge_into_child(p);

  for (NodeId v : watching) {
    if (v == root() || !is_live(v) || nodes_[v].depth == kLeaf ||
        nodes_[v].pos != expired)
      continue;
    const std::uint32_t w = fresh_witness(v, expired);
    nodes_[v].pos = w;
    watch(w, v);
  }
}

void SuffixTree::finalize() {
  if (!text_->has_sentinel())
    throw Error(ErrorCode::SentinelMissing, "finalize needs a sentineled text");
  while (end_ < text_->size()) extend();
  finalized_ = true;
}

ActivePoint SuffixTree::active_point() const {
  ActivePoint ap;
  ap.node = active_node_;
  if (active_len_ > 0) {
    ap.edge_symbol = sym(edge_start(active_child_));
    ap.offset = active_len_;
  }
  return ap;
}

std::vector<Symbol> SuffixTree::active_string() const {
  // Spell the locus by walking up from the active point.
  std::vector<Symbol> out;
  if (active_len_ > 0) {
    const std::uint32_t s = edge_start(active_child_);
    for (std::uint32_t k = active_len_; k > 0; --k) out.push_back(sym(s + k - 1));
  }
  for (NodeId v = active_node_; v != root(); v = nodes_[v].parent) {
    const std::uint32_t s = edge_start(v);
    for (std::uint32_t k = edge_length(v); k > 0; --k) out.push_back(sym(s + k - 1));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string SuffixTree::label_bytes(NodeId v) const {
  std::string out;
  const std::uint32_t s = edge_start(v);
  const std::uint32_t len = edge_length(v);
  out.reserve(len);
  for (std::uint32_t k = 0; k < len; ++k)
    out.push_back(static_cast<char>(text_->byte_of(sym(s + k))));
  return out;
}

void SuffixTree::canonical_rec(NodeId v, std::string& out) const {
  out.push_back('(');
  if (v != root()) {
    const std::string label = label_bytes(v);
    out += std::to_string(label.size());
    out.push_back(':');
    out += label;
  }
  std::vector<std::pair<unsigned char, NodeId>> kids;
  for (const Child& k : children_[v]) kids.emplace_back(text_->byte_of(k.symbol), k.node);
  std::sort(kids.begin(), kids.end());
  for (const auto& [byte, node] : kids) canonical_rec(node, out);
  out.push_back(')');
}

std::string SuffixTree::canonical() const {
  std::string out;
  canonical_rec(root(), out);
  return out;
}

void SuffixTree::dump_rec(NodeId v, int indent, std::string& out) const {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  if (v == root()) {
    out += "root";
  } else {
    const auto [s, e] = edge_label(v);
    out += "(" + std::to_string(s) + "," + std::to_string(e) + ") " + label_bytes(v);
    if (is_leaf(v)) out += " #" + std::to_string(leaf_start(v));
  }
  out.push_back('\n');
  for (const Child& k : children_[v]) dump_rec(k.node, indent + 1, out);
}

std::string SuffixTree::dump() const {
  std::string out;
  dump_rec(root(), 0, out);
  return out;
}

std::string SuffixTree::validate() const {
  const auto spells = [this](NodeId v) {
    std::vector<Symbol> s;
    for (; v != root(); v = nodes_[v].parent) {
      const std::uint32_t st = edge_start(v);
      for (std::uint32_t k = edge_length(v); k > 0; --k) s.push_back(sym(st + k - 1));
    }
    std::reverse(s.begin(), s.end());
    return s;
  };
  std::size_t leaves = 0;
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (!is_live(v)) continue;
    const std::string where = "node " + std::to_string(v) + ": ";
    if (is_leaf(v)) {
      ++leaves;
      if (!children_[v].empty()) return where + "leaf with children";
      if (nodes_[v].pos < win_start_) return where + "leaf start outside window";
    } else if (v != root()) {
      if (children_[v].size() < 2) return where + "internal node with < 2 children";
      if (nodes_[v].pos < win_start_ || nodes_[v].pos + nodes_[v].depth > end_)
        return where + "label position outside window";
      const NodeId link = nodes_[v].link;
      if (link == kNoNode || !is_live(link)) return where + "missing suffix link";
      auto s = spells(v);
      s.erase(s.begin());
      if (spells(link) != s) return where + "suffix link spells the wrong string";
    }
    if (v != root()) {
      if (edge_length(v) < 1) return where + "empty edge label";
      if (node_depth(v) <= nodes_[nodes_[v].parent].depth)
        return where + "strlen not increasing";
    }
    const auto& kids = children_[v];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      if (nodes_[kids[k].node].parent != v) return where + "child parent mismatch";
      if (sym(edge_start(kids[k].node)) != kids[k].symbol)
        return where + "child key differs from label";
      if (k > 0 && kids[k - 1].symbol >= kids[k].symbol)
        return where + "children not sorted";
    }
  }
  if (leaves != leaves_) return "leaf counter out of sync";
  // The active point must spell the lrs of the window.
  std::vector<Symbol> expected(text_->symbols().begin() + (end_ - lrs_),
                               text_->symbols().begin() + end_);
  if (active_string() != expected) return "active point does not spell a suffix";
  if (active_len_ > 0 && nodes_[active_child_].depth != kLeaf &&
      active_len_ >= edge_length(active_child_))
    return "active point not canonical";
  if (mode_ == Mode::Sliding) {
    if (leaf_at_.size() != end_ - lrs_ - win_start_) return "leaf registry size";
    for (std::size_t k = 0; k < leaf_at_.size(); ++k)
      if (!is_live(leaf_at_[k]) || !is_leaf(leaf_at_[k]) ||
          nodes_[leaf_at_[k]].pos != win_start_ + k)
        return "leaf registry out of sync";
  }
  return {};
}

}  // namespace closedfactors
