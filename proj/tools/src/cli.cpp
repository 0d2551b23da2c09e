#include "closedfactors_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "closedfactors/closed_counter.hpp"
#include "closedfactors/enumerator.hpp"
#include "closedfactors/error.hpp"
#include "closedfactors/oracle.hpp"
#include "closedfactors/static_index.hpp"

namespace closedfactors::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxFactorText = 64;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw InputError("cannot open " + path);
    stream_ = &file_;
  }
  std::istream& stream() { return *stream_; }
  std::string read_all() {
    std::string s{std::istreambuf_iterator<char>(*stream_), std::istreambuf_iterator<char>()};
    if (s.empty()) throw InputError("input is empty");
    return s;
  }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

// Loads the index cache if present, otherwise builds it and writes the cache.
StaticIndex index_for(const Text& text, const std::string& cache) {
  if (!cache.empty()) {
    std::ifstream in(cache, std::ios::binary);
    if (in) {
      StaticIndex idx = StaticIndex::load(in);
      if (idx.text().decode() != text.decode())
        throw InputError("index cache " + cache + " was built for a different text");
      return idx;
    }
  }
  StaticIndex idx = StaticIndex::build(append_sentinel(text));
  if (!cache.empty()) {
    std::ofstream out(cache, std::ios::binary);
    if (!out) throw InputError("cannot write " + cache);
    idx.save(out);
  }
  return idx;
}

// Printable ASCII rendering of T[start..end], cut after kMaxFactorText symbols.
std::string factor_text(const Text& text, std::size_t start, std::size_t end) {
  std::string out;
  const std::size_t stop = std::min(end, start + kMaxFactorText - 1);
  for (std::size_t p = start; p <= stop; ++p) {
    const unsigned char c = text.byte_of(text.symbols()[p - 1]);
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default:
        if (c < 0x20 || c >= 0x7f) {
          char buf[5];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  if (stop < end) out += "...";
  return out;
}

json report_json(const CountReport& r, const std::string& mode) {
  json j = {{"total", r.total},     {"n", r.n},         {"j_set_size", r.j_set_size},
            {"sum_t", r.sum_t},     {"sum_z", r.sum_z}, {"mode", mode},
            {"window_ops", r.window_ops}};
  if (r.per_step) {
    json steps = json::array();
    for (const auto& s : *r.per_step)
      steps.push_back({{"j", s.j}, {"t_len", s.t_len}, {"z_len", s.z_len}, {"d", s.d}});
    j["steps"] = std::move(steps);
  }
  return j;
}

struct CountArgs {
  std::string input;
  std::string mode = "online";
  std::string format = "plain";
  std::string index;
  bool trace = false;
};

int run_count(const CountArgs& a, std::istream& in, std::ostream& out) {
  Input input(a.input, in);
  const CountOptions opts{.record_steps = a.trace};
  CountReport r;
  if (a.mode == "online") {
    r = count_online(input.stream(), opts);
  } else {
    const Text text = Text::ingest(input.read_all());
    r = count_offline(index_for(text, a.index), opts);
  }
  if (a.format == "json") {
    out << report_json(r, a.mode).dump() << '\n';
    return kOk;
  }
  const char sep = a.format == "tsv" ? '\t' : ' ';
  if (r.per_step) {
    out << "j" << sep << "t_len" << sep << "z_len" << sep << "d" << '\n';
    for (const auto& s : *r.per_step)
      out << s.j << sep << s.t_len << sep << s.z_len << sep << s.d << '\n';
    out << "total" << sep;
  }
  out << r.total << '\n';
  return kOk;
}

struct EnumerateArgs {
  std::string input;
  std::string format = "tsv";
  std::string index;
  bool occurrences = false;
};

int run_enumerate(const EnumerateArgs& a, std::istream& in, std::ostream& out) {
  Input input(a.input, in);
  const Text text = Text::ingest(input.read_all());
  std::uint64_t emitted = 0;
  const FactorSink sink = [&](const ClosedFactor& f) {
    ++emitted;
    if (a.format == "tsv") {
      out << f.start << '\t' << f.end << '\t' << f.border_len << '\t'
          << factor_text(text, f.start, f.end) << '\n';
    } else if (a.format == "json") {
      out << json{{"start", f.start},
                  {"end", f.end},
                  {"border_len", f.border_len},
                  {"text", factor_text(text, f.start, f.end)}}
                 .dump()
          << '\n';
    }
  };
  if (a.occurrences) {
    enumerate_occurrences(text, sink);
  } else {
    enumerate_distinct(index_for(text, a.index), sink);
  }
  if (a.format == "plain") out << emitted << '\n';
  return kOk;
}

int run_oc(const std::string& path, const std::string& format, std::istream& in,
           std::ostream& out) {
  Input input(path, in);
  const Text text = Text::ingest(input.read_all());
  const auto bits = oc_array(text.symbols());
  if (format == "json") {
    json arr = json::array();
    for (bool b : bits) arr.push_back(b ? 1 : 0);
    out << arr.dump() << '\n';
  } else if (format == "tsv") {
    for (std::size_t i = 0; i < bits.size(); ++i) out << i + 1 << '\t' << bits[i] << '\n';
  } else {
    for (bool b : bits) out << (b ? '1' : '0');
    out << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  int alphabet = 2;
  std::size_t maxlen = 10;
  std::uint64_t seed = 1;
  std::size_t random = 0;
};

// Returns a description of the first disagreement with the oracle, or "".
std::string check_against_oracle(const std::string& s) {
  const Text text = Text::ingest(s);
  const auto expected = oracle::distinct_closed_factors(text);
  if (count_online(s).total != expected.size()) return "count_online";
  if (count_offline(text).total != expected.size()) return "count_offline";
  oracle::FactorSet got;
  const auto sym = text.symbols();
  for (const auto& f : enumerate_distinct(text))
    got.emplace(sym.begin() + static_cast<std::ptrdiff_t>(f.start - 1),
                sym.begin() + static_cast<std::ptrdiff_t>(f.end));
  if (got != expected) return "enumerate_distinct";
  std::vector<std::pair<std::size_t, std::size_t>> occ;
  for (const auto& f : enumerate_occurrences(text)) occ.emplace_back(f.start, f.end);
  if (occ != oracle::closed_occurrences(text)) return "enumerate_occurrences";
  return {};
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  const auto check = [&](const std::string& s) {
    ++checked;
    const std::string what = check_against_oracle(s);
    if (what.empty()) return;
    ++mismatches;
    err << "mismatch (" << what << ") on \"" << s << "\"\n";
  };
  if (a.random > 0) {
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<std::size_t> len(1, a.maxlen);
    std::uniform_int_distribution<int> letter(0, a.alphabet - 1);
    for (std::size_t k = 0; k < a.random; ++k) {
      std::string s(len(rng), 'a');
      for (char& c : s) c = static_cast<char>('a' + letter(rng));
      check(s);
    }
  } else {
    std::string s;
    // Odometer over all strings of each length.
    for (std::size_t n = 1; n <= a.maxlen; ++n) {
      s.assign(n, 'a');
      for (;;) {
        check(s);
        std::size_t k = n;
        while (k > 0 && s[k - 1] == 'a' + a.alphabet - 1) s[--k] = 'a';
        if (k == 0) break;
        ++s[k - 1];
      }
    }
  }
  out << "checked " << checked << " strings over " << a.alphabet << " symbols up to length "
      << a.maxlen << ": " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kMismatch;
}

struct BenchArgs {
  std::size_t maxlen = 10'000'000;
  std::uint64_t seed = 1;
  std::string mode = "online";
};

int run_bench(const BenchArgs& a, std::ostream& out) {
  out << "n\tmode\tseconds\tns_per_symbol\ttotal\n";
  std::mt19937_64 rng(a.seed);
  for (std::size_t n = 10'000; n <= a.maxlen && n <= 10'000'000; n *= 10) {
    std::string s(n, '\0');
    for (char& c : s) c = static_cast<char>(rng());
    for (const std::string mode : {"online", "offline"}) {
      if (a.mode != "both" && a.mode != mode) continue;
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t total =
          mode == "online" ? count_online(s).total : count_offline(Text::ingest(s)).total;
      const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out << n << '\t' << mode << '\t' << sec << '\t' << sec * 1e9 / static_cast<double>(n) << '\t'
          << total << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Count and enumerate the distinct closed factors of a byte string."};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print the number of distinct closed factors");
  count->add_option("input", count_args.input, "Input file (default: standard input)");
  count->add_option("--mode", count_args.mode, "Counting algorithm")
      ->check(CLI::IsMember({"online", "offline"}));
  count->add_option("--format", count_args.format, "Output format")
      ->check(CLI::IsMember({"plain", "tsv", "json"}));
  count->add_flag("--trace", count_args.trace, "Also print the per-step (j, t_len, z_len, d) table");
  count->add_option("--index", count_args.index, "Index cache file for offline mode");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List closed factors");
  enumerate->add_option("input", enum_args.input, "Input file (default: standard input)");
  enumerate->add_option("--format", enum_args.format, "tsv, json lines, or plain (count only)")
      ->check(CLI::IsMember({"plain", "tsv", "json"}));
  enumerate->add_flag("--occurrences", enum_args.occurrences,
                      "List every occurrence instead of one per distinct factor");
  enumerate->add_option("--index", enum_args.index, "Index cache file");

  std::string oc_input;
  std::string oc_format = "plain";
  auto* oc = app.add_subcommand("oc", "Print the open-close array (1 = suffix is closed)");
  oc->add_option("input", oc_input, "Input file (default: standard input)");
  oc->add_option("--format", oc_format, "Output format")->check(CLI::IsMember({"plain", "tsv", "json"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check every algorithm against the brute-force oracle");
  verify->add_option("--alphabet", verify_args.alphabet, "Alphabet size")->check(CLI::Range(1, 26));
  verify->add_option("--maxlen", verify_args.maxlen, "Maximum string length")->check(CLI::Range(1, 16));
  verify->add_option("--seed", verify_args.seed, "Seed for --random");
  verify->add_option("--random", verify_args.random,
                     "Check this many random strings instead of all strings");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time counting on random bytes, n = 10^4 .. 10^7");
  bench->add_option("--maxlen", bench_args.maxlen, "Largest n to run")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "Random seed");
  bench->add_option("--mode", bench_args.mode, "Which counter to time")
      ->check(CLI::IsMember({"online", "offline", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return run_count(count_args, in, out);
    if (*enumerate) return run_enumerate(enum_args, in, out);
    if (*oc) return run_oc(oc_input, oc_format, in, out);
    if (*verify) return run_verify(verify_args, out, err);
    if (*bench) return run_bench(bench_args, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace closedfactors::cli
