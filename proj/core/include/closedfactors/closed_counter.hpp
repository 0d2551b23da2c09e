#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "closedfactors/static_index.hpp"
#include "closedfactors/suffix_tree.hpp"
#include "closedfactors/text.hpp"

namespace closedfactors {

/// One step of the counting recurrence. `j` is 1-based; z_len is 0 when
/// t_len is 0 (the window is empty and not read).
struct StepRecord {
  std::size_t j = 0;
  std::size_t t_len = 0;
  std::size_t z_len = 0;
  std::uint64_t d = 0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct CountReport {
  std::uint64_t total = 0;
  std::size_t n = 0;
  std::size_t j_set_size = 0;
  std::uint64_t sum_t = 0;
  std::uint64_t sum_z = 0;
  /// Present only when CountOptions::record_steps is set.
  std::optional<std::vector<StepRecord>> per_step;
  /// Appends plus deletions applied to the window tree.
  std::uint64_t window_ops = 0;
  EditStats window_edits;
};

struct CountOptions {
  bool record_steps = false;
};

using StepCallback = std::function<void(const StepRecord&)>;

/// Streaming counter over bytes: keeps a suffix tree of the prefix read so
/// far and a sliding tree whose window tracks lrs(prefix).
class OnlineCounter {
 public:
  explicit OnlineCounter(CountOptions options = {});
  ~OnlineCounter();
  OnlineCounter(OnlineCounter&&) noexcept;
  OnlineCounter& operator=(OnlineCounter&&) noexcept;

  /// Consumes one byte; returns the step it produced.
  StepRecord push(unsigned char byte);

  std::size_t size() const noexcept;
  /// Report over the bytes consumed so far. Throws Error(EmptyInput) if
  /// nothing was consumed.
  CountReport report() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Online counting. Throw Error(EmptyInput) on empty input.
CountReport count_online(std::istream& in, CountOptions options = {});
CountReport count_online(std::string_view bytes, CountOptions options = {});
/// Counts the text without its sentinel, if any.
CountReport count_online(const Text& text, CountOptions options = {},
                         const StepCallback& on_step = {});

/// Offline counting through the static index and linked window trees.
/// Throws Error(EmptyInput) on an empty text.
CountReport count_offline(const Text& text, CountOptions options = {},
                          const StepCallback& on_step = {});
/// Same, reusing a prebuilt index; counts the index text minus its sentinel.
CountReport count_offline(const StaticIndex& index, CountOptions options = {},
                          const StepCallback& on_step = {});

}  // namespace closedfactors
