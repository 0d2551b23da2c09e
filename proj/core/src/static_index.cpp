#include "closedfactors/static_index.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

#include "closedfactors/error.hpp"

namespace closedfactors {
namespace {

constexpr std::array<char, 4> kMagic = {'C', 'F', 'I', 'X'};

template <class T>
void write_pod(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
void write_array(std::ostream& out, const std::vector<T>& values) {
  write_pod(out, static_cast<std::uint64_t>(values.size()));
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(T)));
}

template <class T>
T read_pod(std::istream& in) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T)))
    throw Error(ErrorCode::BadFormat, "truncated index file");
  return value;
}

template <class T>
std::vector<T> read_array(std::istream& in, std::uint64_t expected) {
  const auto size = read_pod<std::uint64_t>(in);
  if (size != expected) throw Error(ErrorCode::BadFormat, "index array has the wrong size");
  std::vector<T> values(size);
  if (!in.read(reinterpret_cast<char*>(values.data()),
               static_cast<std::streamsize>(size * sizeof(T))))
    throw Error(ErrorCode::BadFormat, "truncated index file");
  return values;
}

}  // namespace

StaticIndex StaticIndex::build(const Text& text) {
  if (!text.has_sentinel())
    throw Error(ErrorCode::SentinelMissing, "static index needs a sentineled text");
  StaticIndex idx;
  idx.text_ = text;
  {
    SuffixTree tree(idx.text_);
    tree.finalize();
    const std::size_t count = tree.capacity();
    std::vector<NodeId> old_of(count);
    std::vector<NodeId> new_of(count);
    idx.parent_.resize(count);
    idx.strlen_.resize(count);
    idx.witness_.resize(count);

    // Preorder renumbering over the edge-sorted children.
    std::vector<NodeId> stack{tree.root()};
    NodeId next = 0;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      const NodeId id = next++;
      old_of[id] = v;
      new_of[v] = id;
      idx.parent_[id] = v == tree.root() ? kNoNode : new_of[tree.parent(v)];
      idx.strlen_[id] = static_cast<std::uint32_t>(tree.strlen(v));
      if (tree.is_leaf(v)) idx.witness_[id] = static_cast<std::uint32_t>(tree.leaf_start(v) - 1);
      const auto kids = tree.children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->node);
    }

    idx.child_begin_.assign(count + 1, 0);
    idx.child_list_.reserve(count - 1);
    for (NodeId id = 0; id < count; ++id) {
      idx.child_begin_[id] = static_cast<std::uint32_t>(idx.child_list_.size());
      for (const auto& k : tree.children(old_of[id])) idx.child_list_.push_back(new_of[k.node]);
    }
    idx.child_begin_[count] = static_cast<std::uint32_t>(idx.child_list_.size());
  }
  for (NodeId v = static_cast<NodeId>(idx.parent_.size()); v-- > 0;)
    if (!idx.is_leaf(v)) idx.witness_[v] = idx.witness_[idx.child_list_[idx.child_begin_[v]]];
  idx.build_derived();
  return idx;
}

void StaticIndex::build_derived() {
  const std::size_t count = parent_.size();
  const std::size_t n = text_.size();

  leaf_of_.assign(n, kNoNode);
  leaf_order_.clear();
  leaf_order_.reserve(n);
  leaf_rank_.assign(n, 0);
  range_lo_.assign(count, 0);
  range_hi_.assign(count, 0);
  for (NodeId v = 0; v < count; ++v) {
    if (!is_leaf(v)) continue;
    const std::uint32_t start = witness_[v];
    leaf_of_[start] = v;
    leaf_rank_[start] = static_cast<std::uint32_t>(leaf_order_.size());
    range_lo_[v] = range_hi_[v] = static_cast<std::uint32_t>(leaf_order_.size());
    leaf_order_.push_back(start);
  }
  std::vector<std::uint32_t> size(count, 1);
  for (NodeId v = static_cast<NodeId>(count); v-- > 0;) {
    const auto kids = children(v);
    if (kids.empty()) continue;
    range_lo_[v] = range_lo_[kids.front()];
    range_hi_[v] = range_hi_[kids.back()];
    for (NodeId c : kids) size[v] += size[c];
  }

  hld_pos_.assign(count, 0);
  hld_head_.assign(count, 0);
  hld_node_.assign(count, 0);
  hld_weight_.assign(count, 0);
  std::vector<NodeId> stack{root()};
  std::uint32_t next = 0;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    hld_pos_[v] = next;
    hld_node_[next] = v;
    hld_weight_[next] = strlen_[v];
    ++next;
    const auto kids = children(v);
    if (kids.empty()) continue;
    NodeId heavy = kids.front();
    for (NodeId c : kids)
      if (size[c] > size[heavy]) heavy = c;
    for (NodeId c : kids) {
      if (c == heavy) continue;
      hld_head_[c] = c;
      stack.push_back(c);
    }
    // Pushed last so it is visited next and extends v's path contiguously.
    hld_head_[heavy] = hld_head_[v];
    stack.push_back(heavy);
  }

  leaf_values_ = WaveletMatrix(leaf_order_);
}

NodeId StaticIndex::leaf_of(std::size_t pos) const {
  if (pos < 1 || pos > leaf_of_.size())
    throw Error(ErrorCode::OutOfRange, "no leaf for position " + std::to_string(pos));
  return leaf_of_[pos - 1];
}

std::size_t StaticIndex::leaf_at_rank(std::size_t rank) const {
  if (rank < 1 || rank > leaf_order_.size())
    throw Error(ErrorCode::OutOfRange, "leaf rank out of range");
  return leaf_order_[rank - 1] + 1;
}

std::size_t StaticIndex::rank_of(std::size_t pos) const {
  if (pos < 1 || pos > leaf_rank_.size())
    throw Error(ErrorCode::OutOfRange, "position out of range");
  return leaf_rank_[pos - 1] + 1;
}

NodeId StaticIndex::waq0(NodeId u, std::uint32_t t) const {
  NodeId v = u;
  for (;;) {
    const NodeId h = hld_head_[v];
    if (h == root() || strlen_[parent_[h]] < t) {
      const auto first = hld_weight_.begin() + hld_pos_[h];
      const auto last = hld_weight_.begin() + hld_pos_[v] + 1;
      const auto it = std::lower_bound(first, last, t);
      return hld_node_[static_cast<std::size_t>(it - hld_weight_.begin())];
    }
    v = parent_[h];
  }
}

NodeId StaticIndex::waq(NodeId u, std::size_t t) const {
  if (u >= parent_.size()) throw Error(ErrorCode::OutOfRange, "no such node");
  if (t < 1 || t > strlen_[u])
    throw Error(ErrorCode::OutOfRange, "weight threshold outside [1, strlen(u)]");
  return waq0(u, static_cast<std::uint32_t>(t));
}

Locus StaticIndex::locus(std::size_t pos, std::size_t len) const {
  if (pos < 1 || pos > text_.size() || pos + len - 1 > text_.size())
    throw Error(ErrorCode::OutOfRange, "factor outside the text");
  if (len == 0) return Locus{root(), 0};
  const NodeId v = waq0(leaf_of_[pos - 1], static_cast<std::uint32_t>(len));
  return Locus{v, len - strlen_[parent_[v]]};
}

std::pair<std::size_t, std::size_t> StaticIndex::subtree_leaf_range(NodeId v) const {
  if (v >= parent_.size()) throw Error(ErrorCode::OutOfRange, "no such node");
  return {range_lo_[v] + std::size_t{1}, range_hi_[v] + std::size_t{1}};
}

std::optional<std::size_t> StaticIndex::range_predecessor(std::size_t rank_lo,
                                                          std::size_t rank_hi,
                                                          std::size_t pos) const {
  if (rank_lo < 1 || rank_lo > rank_hi || rank_hi > leaf_order_.size())
    throw Error(ErrorCode::InvalidRange, "invalid leaf rank interval");
  if (pos <= 1) return std::nullopt;
  const auto bound = static_cast<std::uint32_t>(std::min(pos - 1, leaf_order_.size()));
  const auto p = leaf_values_.prev_value(rank_lo - 1, rank_hi, bound);
  if (!p) return std::nullopt;
  return std::size_t{*p} + 1;
}

void StaticIndex::save(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  write_pod(out, kFormatVersion);
  write_pod(out, static_cast<std::uint64_t>(text_.size()));
  write_pod(out, static_cast<std::uint64_t>(text_.id_count()));
  write_pod(out, static_cast<std::uint64_t>(text_.alphabet().size()));
  out.write(reinterpret_cast<const char*>(text_.alphabet().data()),
            static_cast<std::streamsize>(text_.alphabet().size()));
  write_array(out, std::vector<Symbol>(text_.symbols().begin(), text_.symbols().end()));
  write_array(out, parent_);
  write_array(out, strlen_);
  write_array(out, witness_);
  write_array(out, child_begin_);
  write_array(out, child_list_);
  if (!out) throw Error(ErrorCode::BadFormat, "failed to write index");
}

StaticIndex StaticIndex::load(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    throw Error(ErrorCode::BadFormat, "not an index file");
  if (read_pod<std::uint32_t>(in) != kFormatVersion)
    throw Error(ErrorCode::BadFormat, "unsupported index format version");
  const auto n = read_pod<std::uint64_t>(in);
  const auto ids = read_pod<std::uint64_t>(in);
  const auto bytes = read_pod<std::uint64_t>(in);
  if (n == 0 || ids >= n || bytes > 256 || (bytes != 0 && bytes != ids))
    throw Error(ErrorCode::BadFormat, "corrupt index header");
  std::vector<unsigned char> alphabet(bytes);
  if (!in.read(reinterpret_cast<char*>(alphabet.data()), static_cast<std::streamsize>(bytes)))
    throw Error(ErrorCode::BadFormat, "truncated index file");
  auto symbols = read_array<Symbol>(in, n);

  StaticIndex idx;
  idx.text_ = Text::from_symbols(std::move(symbols), std::move(alphabet), true, ids);
  const auto count = read_pod<std::uint64_t>(in);
  in.seekg(-static_cast<std::streamoff>(sizeof(std::uint64_t)), std::ios::cur);
  idx.parent_ = read_array<NodeId>(in, count);
  idx.strlen_ = read_array<std::uint32_t>(in, count);
  idx.witness_ = read_array<std::uint32_t>(in, count);
  idx.child_begin_ = read_array<std::uint32_t>(in, count + 1);
  idx.child_list_ = read_array<NodeId>(in, count - 1);
  for (std::uint64_t v = 1; v < count; ++v)
    if (idx.parent_[v] >= v) throw Error(ErrorCode::BadFormat, "corrupt tree arrays");
  for (std::uint64_t v = 0; v < count; ++v)
    if (idx.child_begin_[v] > idx.child_begin_[v + 1] || idx.witness_[v] >= n)
      throw Error(ErrorCode::BadFormat, "corrupt tree arrays");
  if (idx.child_begin_[count] != count - 1)
    throw Error(ErrorCode::BadFormat, "corrupt tree arrays");
  for (NodeId c : idx.child_list_)
    if (c == 0 || c >= count) throw Error(ErrorCode::BadFormat, "corrupt tree arrays");
  idx.build_derived();
  return idx;
}

}  // namespace closedfactors
