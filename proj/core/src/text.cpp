#include "closedfactors/text.hpp"

#include <unordered_map>

#include "closedfactors/error.hpp"

namespace closedfactors {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SentinelPresent: return "SentinelPresent";
    case ErrorCode::SentinelMissing: return "SentinelMissing";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::PastEnd: return "PastEnd";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

Text Text::ingest(std::string_view bytes) {
  if (bytes.empty()) throw Error(ErrorCode::EmptyInput, "input text is empty");
  Text t;
  t.symbols_.reserve(bytes.size() + 1);
  for (char c : bytes) t.push_back(static_cast<unsigned char>(c));
  return t;
}

Text Text::from_symbols(std::vector<Symbol> symbols,
                        std::vector<unsigned char> bytes,
                        bool sentinel_present,
                        std::size_t id_count) {
  Text t;
  if (!bytes.empty() && bytes.size() != id_count)
    throw Error(ErrorCode::BadFormat, "byte table does not match the id count");
  const auto sigma = static_cast<Symbol>(id_count);
  for (Symbol id = 0; id < bytes.size(); ++id) {
    if (t.byte_to_id_[bytes[id]] != kUnmapped)
      throw Error(ErrorCode::BadFormat, "duplicate byte in alphabet");
    t.byte_to_id_[bytes[id]] = static_cast<std::int32_t>(id);
  }
  t.id_to_byte_ = std::move(bytes);
  t.id_count_ = id_count;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    const bool last = k + 1 == symbols.size();
    if (symbols[k] > sigma || (symbols[k] == sigma && !(sentinel_present && last)))
      throw Error(ErrorCode::BadFormat, "symbol id out of alphabet");
  }
  if (sentinel_present && (symbols.empty() || symbols.back() != sigma))
    throw Error(ErrorCode::BadFormat, "sentinel missing at end");
  t.symbols_ = std::move(symbols);
  t.sentinel_present_ = sentinel_present;
  return t;
}

Text Text::from_integers(std::span<const std::uint32_t> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "input text is empty");
  Text t;
  std::unordered_map<std::uint32_t, Symbol> ids;
  t.symbols_.reserve(values.size() + 1);
  for (std::uint32_t v : values) {
    const auto [it, fresh] = ids.emplace(v, static_cast<Symbol>(ids.size()));
    t.symbols_.push_back(it->second);
  }
  t.id_count_ = ids.size();
  return t;
}

Symbol Text::push_back(unsigned char byte) {
  if (sentinel_present_)
    throw Error(ErrorCode::SentinelPresent, "text is frozen by its sentinel");
  if (!byte_alphabet())
    throw Error(ErrorCode::BadFormat, "cannot append bytes to an integer-alphabet text");
  std::int32_t& id = byte_to_id_[byte];
  if (id == kUnmapped) {
    id = static_cast<std::int32_t>(id_to_byte_.size());
    id_to_byte_.push_back(byte);
    ++id_count_;
  }
  symbols_.push_back(static_cast<Symbol>(id));
  return static_cast<Symbol>(id);
}

void Text::append_sentinel() {
  if (sentinel_present_)
    throw Error(ErrorCode::SentinelPresent, "sentinel already appended");
  symbols_.push_back(static_cast<Symbol>(id_count_));
  sentinel_present_ = true;
}

Symbol Text::sentinel() const {
  if (!sentinel_present_)
    throw Error(ErrorCode::SentinelMissing, "text has no sentinel");
  return static_cast<Symbol>(id_count_);
}

Symbol Text::at(std::size_t pos) const {
  if (pos < 1 || pos > symbols_.size())
    throw Error(ErrorCode::OutOfRange, "position " + std::to_string(pos) +
                                           " outside [1, " +
                                           std::to_string(symbols_.size()) + "]");
  return symbols_[pos - 1];
}

std::optional<Symbol> Text::lookup(unsigned char byte) const noexcept {
  if (byte_to_id_[byte] == kUnmapped) return std::nullopt;
  return static_cast<Symbol>(byte_to_id_[byte]);
}

unsigned char Text::byte_of(Symbol id) const noexcept {
  if (id < id_to_byte_.size()) return id_to_byte_[id];
  return id < id_count_ ? '?' : '$';
}

std::string Text::decode() const {
  return decode(Window{1, raw_size()});
}

std::string Text::decode(Window w) const {
  std::string out;
  if (w.empty()) return out;
  if (w.start < 1 || w.end > symbols_.size() || w.start > w.end + 1)
    throw Error(ErrorCode::OutOfRange, "window outside text");
  out.reserve(w.length());
  for (std::size_t p = w.start; p <= w.end; ++p)
    out.push_back(static_cast<char>(byte_of(symbols_[p - 1])));
  return out;
}

Text append_sentinel(Text t) {
  t.append_sentinel();
  return t;
}

}  // namespace closedfactors
