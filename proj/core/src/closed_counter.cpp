#include "closedfactors/closed_counter.hpp"

#include <istream>

#include "closedfactors/error.hpp"
#include "closedfactors/simulated_sliding.hpp"
#include "closedfactors/sliding_suffix_tree.hpp"

namespace closedfactors {
namespace {

// Accumulates the recurrence; shared by every counting path.
class Accumulator {
 public:
  explicit Accumulator(const CountOptions& options) {
    if (options.record_steps) report_.per_step.emplace();
  }

  // One step: `extend_prefix` returns t_len; the window tree is appended to
  // and then shrunk from the left to width t_len.
  template <class Window, class ExtendPrefix>
  StepRecord step(ExtendPrefix&& extend_prefix, Window& window) {
    StepRecord rec;
    rec.j = ++report_.n;
    rec.t_len = extend_prefix();
    window.append_right();
    ++report_.window_ops;
    while (window.width() > rec.t_len) {
      window.delete_left();
      ++report_.window_ops;
    }
    if (rec.t_len == 0) {
      rec.d = 1;
    } else {
      rec.z_len = window.lrs_len();
      rec.d = rec.t_len - rec.z_len;
      ++report_.j_set_size;
      report_.sum_t += rec.t_len;
      report_.sum_z += rec.z_len;
    }
    report_.total += rec.d;
    if (report_.per_step) report_.per_step->push_back(rec);
    return rec;
  }

  CountReport& report() { return report_; }

 private:
  CountReport report_;
};

}  // namespace

struct OnlineCounter::State {
  explicit State(const CountOptions& options)
      : acc(options), prefix(text), window(text) {}

  Text text;
  Accumulator acc;
  SuffixTree prefix;
  SlidingSuffixTree window;
};

OnlineCounter::OnlineCounter(CountOptions options)
    : state_(std::make_unique<State>(options)) {}
OnlineCounter::~OnlineCounter() = default;
OnlineCounter::OnlineCounter(OnlineCounter&&) noexcept = default;
OnlineCounter& OnlineCounter::operator=(OnlineCounter&&) noexcept = default;

StepRecord OnlineCounter::push(unsigned char byte) {
  State& s = *state_;
  s.text.push_back(byte);
  return s.acc.step([&] { return s.prefix.extend(); }, s.window);
}

std::size_t OnlineCounter::size() const noexcept { return state_->text.size(); }

CountReport OnlineCounter::report() const {
  if (state_->text.empty()) throw Error(ErrorCode::EmptyInput, "input text is empty");
  CountReport r = state_->acc.report();
  r.window_edits = state_->window.stats();
  return r;
}

CountReport count_online(std::istream& in, CountOptions options) {
  OnlineCounter counter(options);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const auto got = static_cast<std::size_t>(in.gcount());
    for (std::size_t k = 0; k < got; ++k) counter.push(static_cast<unsigned char>(buf[k]));
  }
  return counter.report();
}

CountReport count_online(std::string_view bytes, CountOptions options) {
  if (bytes.empty()) throw Error(ErrorCode::EmptyInput, "input text is empty");
  OnlineCounter counter(options);
  for (char c : bytes) counter.push(static_cast<unsigned char>(c));
  return counter.report();
}

CountReport count_online(const Text& text, CountOptions options, const StepCallback& on_step) {
  const std::size_t n = text.raw_size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "input text is empty");
  Accumulator acc(options);
  SuffixTree prefix(text);
  SlidingSuffixTree window(text);
  for (std::size_t j = 0; j < n; ++j) {
    const StepRecord rec = acc.step([&] { return prefix.extend(); }, window);
    if (on_step) on_step(rec);
  }
  CountReport r = std::move(acc.report());
  r.window_edits = window.stats();
  return r;
}

CountReport count_offline(const StaticIndex& index, CountOptions options,
                          const StepCallback& on_step) {
  const std::size_t n = index.text().raw_size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "input text is empty");
  Accumulator acc(options);
  LinkedWindowTree prefix(index);
  LinkedWindowTree window(index);
  for (std::size_t j = 0; j < n; ++j) {
    const StepRecord rec = acc.step([&] { return prefix.append_right(); }, window);
    if (on_step) on_step(rec);
  }
  CountReport r = std::move(acc.report());
  r.window_edits = window.stats();
  return r;
}

CountReport count_offline(const Text& text, CountOptions options, const StepCallback& on_step) {
  if (text.raw_size() == 0) throw Error(ErrorCode::EmptyInput, "input text is empty");
  if (text.has_sentinel()) return count_offline(StaticIndex::build(text), options, on_step);
  return count_offline(StaticIndex::build(append_sentinel(text)), options, on_step);
}

}  // namespace closedfactors
