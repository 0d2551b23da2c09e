#include "closedfactors/simulated_sliding.hpp"

#include <algorithm>

#include "closedfactors/error.hpp"

namespace closedfactors {

LinkedWindowTree::LinkedWindowTree(const StaticIndex& big)
    : big_(&big), reverse_link_(big.node_count(), kNoNode) {
  nodes_.push_back(Node{kNoNode, 0, big.root(), kNoNode, kNoNode});
  children_.emplace_back();
}

NodeId LinkedWindowTree::linked_node(NodeId v) const { return big_node_of(v); }

NodeId LinkedWindowTree::new_node(Node n) {
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

void LinkedWindowTree::free_node(NodeId v) {
  ++stats_.nodes_deleted;
  const NodeId x = nodes_[v].big_edge;
  if (x != kNoNode && reverse_link_[x] == v) reverse_link_[x] = kNoNode;
  nodes_[v].depth = kFree;
  nodes_[v].big_edge = kNoNode;
  nodes_[v].link = kNoNode;
  children_[v].clear();
  free_.push_back(v);
}

void LinkedWindowTree::link_edge(NodeId v, NodeId x) {
  nodes_[v].big_edge = x;
  reverse_link_[x] = v;
}

void LinkedWindowTree::remove_child(NodeId u, NodeId child) {
  ++stats_.edges_deleted;
  auto& kids = children_[u];
  auto it = std::find(kids.begin(), kids.end(), child);
  *it = kids.back();
  kids.pop_back();
}

void LinkedWindowTree::replace_child(NodeId u, NodeId old_child, NodeId new_child) {
  auto& kids = children_[u];
  *std::find(kids.begin(), kids.end(), old_child) = new_child;
}

NodeId LinkedWindowTree::split(NodeId u, NodeId child, std::uint32_t offset,
                               std::uint32_t start) {
  const std::uint32_t mid_depth = nodes_[u].depth + offset;
  // T[start..start+mid_depth) becomes right-branching, so the big tree has a
  // node spelling it exactly.
  const NodeId big_mid = waq(big_->leaf_of0(start), mid_depth);
  const NodeId upper = nodes_[child].big_edge;
  const NodeId mid = new_node(Node{u, mid_depth, big_mid, kNoNode, kNoNode});
  ++stats_.edges_created;
  replace_child(u, child, mid);
  link_edge(mid, upper);
  nodes_[child].parent = mid;
  children_[mid].push_back(child);
  link_edge(child, waq(big_node_of(child), mid_depth + 1));
  return mid;
}

void LinkedWindowTree::add_leaf(NodeId u, std::uint32_t start, NodeId edge) {
  const NodeId leaf = new_node(Node{u, kLeaf, start, kNoNode, kNoNode});
  ++stats_.edges_created;
  children_[u].push_back(leaf);
  link_edge(leaf, edge);
  leaf_at_.push_back(leaf);
}

void LinkedWindowTree::descend(std::uint32_t str_start, std::uint32_t len) {
  for (;;) {
    const std::uint32_t d = nodes_[active_node_].depth;
    if (len == d) {
      active_child_ = kNoNode;
      active_len_ = 0;
      return;
    }
    const NodeId ch = reverse_link_[big_edge_toward(str_start, d)];
    ++stats_.active_moves;
    if (nodes_[ch].depth == kLeaf || len - d < edge_length(ch)) {
      active_child_ = ch;
      active_len_ = len - d;
      return;
    }
    active_node_ = ch;
  }
}

void LinkedWindowTree::shorten(std::uint32_t str_start) {
  if (active_node_ != root()) active_node_ = nodes_[active_node_].link;
  descend(str_start, lrs_);
}

std::size_t LinkedWindowTree::append_right(Symbol symbol) {
  if (end_ >= big_->size() || sym(end_) != symbol)
    throw Error(ErrorCode::PastEnd, "appended symbol does not match the text");
  return append_right();
}

std::size_t LinkedWindowTree::append_right() {
  if (end_ >= big_->size())
    throw Error(ErrorCode::PastEnd, "window already ends at the text end");
  const std::uint32_t j = end_;
  const Symbol c = sym(j);
  ++end_;
  NodeId pending = kNoNode;
  for (;;) {
    const std::uint32_t start = j - lrs_;
    if (active_len_ == 0) {
      const NodeId u = active_node_;
      const NodeId edge = big_edge_toward(start, nodes_[u].depth);
      const NodeId ch = reverse_link_[edge];
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
      add_leaf(u, start, edge);
      if (pending != kNoNode) {
        nodes_[pending].link = u;
        pending = kNoNode;
      }
    } else {
      const NodeId ch = active_child_;
      const std::uint32_t at = nodes_[active_node_].depth + active_len_;
      if (sym(base(ch) + at) == c) {
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
      add_leaf(mid, start, big_edge_toward(start, nodes_[mid].depth));
      if (pending != kNoNode) nodes_[pending].link = mid;
      pending = mid;
    }
    if (lrs_ == 0) return 0;
    --lrs_;
    shorten(start + 1);
  }
}

void LinkedWindowTree::merge_into_child(NodeId p) {
  const NodeId c = children_[p].front();
  const NodeId g = nodes_[p].parent;
  replace_child(g, p, c);
  nodes_[c].parent = g;
  ++stats_.edges_deleted;
  reverse_link_[nodes_[c].big_edge] = kNoNode;
  link_edge(c, nodes_[p].big_edge);
  nodes_[p].big_edge = kNoNode;
  if (active_node_ == p) {
    active_len_ += nodes_[p].depth - nodes_[g].depth;
    active_node_ = g;
    active_child_ = c;
  } else if (active_child_ == p) {
    active_child_ = c;
  }
  free_node(p);
}

std::size_t LinkedWindowTree::delete_left() {
  if (win_start_ == end_) throw Error(ErrorCode::EmptyWindow, "window is empty");
  const NodeId leaf = leaf_at_.front();
  leaf_at_.pop_front();
  ++win_start_;

  if (active_len_ > 0 && active_child_ == leaf) {
    // The lrs becomes unique and takes over the departing leaf. Its first
    // edge symbol is unchanged, so the edge link stays valid.
    const std::uint32_t s = end_ - lrs_;
    nodes_[leaf].key = s;
    leaf_at_.push_back(leaf);
    ++stats_.leaf_relabels;
    --lrs_;
    shorten(s + 1);
    return lrs_;
  }

  const NodeId p = nodes_[leaf].parent;
  remove_child(p, leaf);
  free_node(leaf);
  if (p != root() && children_[p].size() == 1) merge_into_child(p);
  return lrs_;
}

std::vector<Symbol> LinkedWindowTree::spell(NodeId v) const {
  const std::uint32_t b = base(v);
  const auto s = big_->text().symbols();
  return {s.begin() + b, s.begin() + b + depth(v)};
}

std::vector<Symbol> LinkedWindowTree::active_string() const {
  std::vector<Symbol> out = spell(active_node_);
  if (active_len_ > 0) {
    const std::uint32_t b = base(active_child_) + nodes_[active_node_].depth;
    for (std::uint32_t k = 0; k < active_len_; ++k) out.push_back(sym(b + k));
  }
  return out;
}

void LinkedWindowTree::canonical_rec(NodeId v, std::string& out) const {
  const Text& text = big_->text();
  out.push_back('(');
  if (v != root()) {
    const std::uint32_t from = nodes_[nodes_[v].parent].depth;
    const std::uint32_t len = edge_length(v);
    out += std::to_string(len);
    out.push_back(':');
    for (std::uint32_t k = 0; k < len; ++k)
      out.push_back(static_cast<char>(text.byte_of(sym(base(v) + from + k))));
  }
  std::vector<std::pair<unsigned char, NodeId>> kids;
  const std::uint32_t d = nodes_[v].depth;
  for (NodeId c : children_[v]) kids.emplace_back(text.byte_of(sym(base(c) + d)), c);
  std::sort(kids.begin(), kids.end());
  for (const auto& [byte, node] : kids) canonical_rec(node, out);
  out.push_back(')');
}

std::string LinkedWindowTree::canonical() const {
  std::string out;
  canonical_rec(root(), out);
  return out;
}

std::string LinkedWindowTree::validate() const {
  std::size_t linked = 0;
  std::size_t live_edges = 0;
  for (NodeId x = 0; x < reverse_link_.size(); ++x) {
    const NodeId v = reverse_link_[x];
    if (v == kNoNode) continue;
    ++linked;
    if (!is_live(v) || nodes_[v].big_edge != x) return "stale reverse link";
  }
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (!is_live(v)) continue;
    const std::string where = "node " + std::to_string(v) + ": ";
    if (is_leaf(v)) {
      if (!children_[v].empty()) return where + "leaf with children";
      if (nodes_[v].key < win_start_) return where + "leaf start outside window";
    } else if (v != root()) {
      if (children_[v].size() < 2) return where + "internal node with < 2 children";
      if (big_->strlen(nodes_[v].key) != nodes_[v].depth)
        return where + "linked big node has a different string depth";
      const NodeId link = nodes_[v].link;
      if (link == kNoNode || !is_live(link) || is_leaf(link)) return where + "missing suffix link";
      auto s = spell(v);
      s.erase(s.begin());
      if (spell(link) != s) return where + "suffix link spells the wrong string";
    }
    if (v == root()) continue;
    ++live_edges;
    const NodeId p = nodes_[v].parent;
    if (std::find(children_[p].begin(), children_[p].end(), v) == children_[p].end())
      return where + "parent does not list the node";
    if (depth(v) <= nodes_[p].depth) return where + "strlen not increasing";
    // The parent's string must be a prefix of the node's string.
    const auto ps = spell(p);
    const auto vs = spell(v);
    if (!std::equal(ps.begin(), ps.end(), vs.begin())) return where + "labels do not chain";
    const NodeId x = nodes_[v].big_edge;
    if (x == kNoNode || reverse_link_[x] != v) return where + "edge not linked";
    if (big_->parent(x) != big_node_of(p)) return where + "linked edge leaves the wrong big node";
    if (big_->edge_symbol(x) != vs[nodes_[p].depth])
      return where + "linked edge starts with a different symbol";
  }
  if (linked != live_edges) return "reverse link count differs from edge count";
  if (leaf_at_.size() != end_ - lrs_ - win_start_) return "leaf registry size";
  for (std::size_t k = 0; k < leaf_at_.size(); ++k)
    if (!is_live(leaf_at_[k]) || !is_leaf(leaf_at_[k]) || nodes_[leaf_at_[k]].key != win_start_ + k)
      return "leaf registry out of sync";
  const auto sy = big_->text().symbols();
  const std::vector<Symbol> expected(sy.begin() + (end_ - lrs_), sy.begin() + end_);
  if (active_string() != expected) return "active point does not spell the lrs";
  if (active_len_ > 0 && !is_leaf(active_child_) && active_len_ >= edge_length(active_child_))
    return "active point not canonical";
  return {};
}

}  // namespace closedfactors
