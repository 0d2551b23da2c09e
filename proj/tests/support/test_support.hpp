#pragma once

// Test-only helpers: string generators and a naive suffix-trie oracle that
// renders in the same canonical format as SuffixTree::canonical().

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace closedfactors::testing {

/// Calls `fn` for every string over the first `alphabet` lowercase letters
/// with length in [1, max_len].
inline void for_each_string(int alphabet, std::size_t max_len,
                            const std::function<void(const std::string&)>& fn) {
  std::string s;
  std::function<void()> rec = [&] {
    if (!s.empty()) fn(s);
    if (s.size() == max_len) return;
    for (int c = 0; c < alphabet; ++c) {
      s.push_back(static_cast<char>('a' + c));
      rec();
      s.pop_back();
    }
  };
  rec();
}

inline std::string random_string(std::mt19937_64& rng, std::size_t len, int alphabet) {
  std::uniform_int_distribution<int> pick(0, alphabet - 1);
  std::string s(len, 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(rng));
  return s;
}

/// Compact trie of all suffixes of `s`, with unary nodes collapsed, in the
/// canonical serialization format.
inline std::string naive_canonical(std::string_view s) {
  struct TrieNode {
    std::map<unsigned char, std::unique_ptr<TrieNode>> next;
  };
  TrieNode root;
  for (std::size_t i = 0; i < s.size(); ++i) {
    TrieNode* cur = &root;
    for (std::size_t k = i; k < s.size(); ++k) {
      auto& slot = cur->next[static_cast<unsigned char>(s[k])];
      if (!slot) slot = std::make_unique<TrieNode>();
      cur = slot.get();
    }
  }
  std::string out;
  std::function<void(const TrieNode&)> render = [&](const TrieNode& n) {
    for (const auto& [c, child] : n.next) {
      std::string label(1, static_cast<char>(c));
      const TrieNode* cur = child.get();
      while (cur->next.size() == 1) {
        label.push_back(static_cast<char>(cur->next.begin()->first));
        cur = cur->next.begin()->second.get();
      }
      out += "(" + std::to_string(label.size()) + ":" + label;
      render(*cur);
      out += ")";
    }
  };
  out += "(";
  render(root);
  out += ")";
  return out;
}

}  // namespace closedfactors::testing
