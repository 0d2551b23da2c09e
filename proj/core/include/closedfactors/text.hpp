#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace closedfactors {

/// Dense symbol id; ids are handed out in first-occurrence order.
using Symbol = std::uint32_t;

/// Closed interval [start, end] of 1-based positions. The empty window is
/// encoded as start == end + 1.
struct Window {
  std::size_t start = 1;
  std::size_t end = 0;

  constexpr std::size_t length() const noexcept { return end + 1 - start; }
  constexpr bool empty() const noexcept { return start == end + 1; }

  friend constexpr bool operator==(const Window&, const Window&) = default;
};

/// Append-only symbol sequence over a byte alphabet.
///
/// Public positions are 1-based; `symbols()` exposes the 0-based backing
/// store for the tree modules. Once a sentinel is appended the text is
/// frozen: the sentinel id is strictly larger than every byte id and occurs
/// exactly once, at the end.
class Text {
 public:
  Text() { byte_to_id_.fill(kUnmapped); }

  /// Throws Error(EmptyInput) on an empty byte sequence.
  static Text ingest(std::string_view bytes);

  /// Builds a text directly from dense ids (used by index loading).
  /// `id_count` counts non-sentinel ids; `bytes` maps each id back to its
  /// byte and is either empty (integer alphabet) or of size `id_count`.
  static Text from_symbols(std::vector<Symbol> symbols,
                           std::vector<unsigned char> bytes,
                           bool sentinel_present,
                           std::size_t id_count);

  /// Text over an integer alphabet; values get dense ids in order of first
  /// appearance. Such texts have no byte mapping: decode() renders every
  /// symbol as '?'. Throws Error(EmptyInput) on an empty sequence.
  static Text from_integers(std::span<const std::uint32_t> values);

  /// Streaming append; returns the id assigned to `byte`.
  Symbol push_back(unsigned char byte);

  void append_sentinel();

  /// Length including the sentinel, if any.
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t raw_size() const noexcept {
    return symbols_.size() - (sentinel_present_ ? 1 : 0);
  }
  bool empty() const noexcept { return symbols_.empty(); }

  /// Number of distinct symbols, counting the sentinel once appended.
  std::size_t sigma() const noexcept {
    return id_count_ + (sentinel_present_ ? 1 : 0);
  }
  bool has_sentinel() const noexcept { return sentinel_present_; }
  Symbol sentinel() const;

  /// 1-based access; throws Error(OutOfRange).
  Symbol at(std::size_t pos) const;

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::optional<Symbol> lookup(unsigned char byte) const noexcept;

  /// Non-sentinel ids in use.
  std::size_t id_count() const noexcept { return id_count_; }
  bool byte_alphabet() const noexcept { return id_to_byte_.size() == id_count_; }

  /// Byte for a non-sentinel id. The sentinel renders as '$'; ids without a
  /// byte render as '?'.
  unsigned char byte_of(Symbol id) const noexcept;
  std::span<const unsigned char> alphabet() const noexcept {
    return id_to_byte_;
  }

  /// Original bytes, sentinel excluded.
  std::string decode() const;
  /// Bytes of T[w.start..w.end]; the sentinel renders as '$'.
  std::string decode(Window w) const;

 private:
  static constexpr std::int32_t kUnmapped = -1;

  std::vector<Symbol> symbols_;
  std::array<std::int32_t, 256> byte_to_id_{};
  std::vector<unsigned char> id_to_byte_;
  std::size_t id_count_ = 0;
  bool sentinel_present_ = false;
};

/// Value-returning form of Text::append_sentinel.
Text append_sentinel(Text t);

}  // namespace closedfactors
