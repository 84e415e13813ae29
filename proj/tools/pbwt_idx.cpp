// pbwt-idx: build, query and dump positional (PBWT) and substring (FM) indexes.
//
// Exit codes: 0 success (including empty results), 1 IO failure,
// 2 usage or validation error, 3 --verify mismatch.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbwtidx/pbwtidx.hpp"

namespace fs = std::filesystem;
using namespace pbwtidx;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr const char* kDefaultIndexPath = "index.pbwtidx";

struct BuildOptions {
  std::string mode = "positional";
  std::string input;
  std::string text;
  std::string alphabet = std::string(Alphabet::kDefaultSymbols);
  std::string policy = "sampled";
  std::size_t stride = 0;  // 0: ceil(lg n)
  std::size_t sa_stride = 8;
  std::string rank = "exact";
  std::string output = kDefaultIndexPath;
};

struct QueryOptions {
  std::string index = kDefaultIndexPath;
  std::string pattern;
  std::size_t position = 0;
  std::string strategy = "backward";
  bool trace = false;
  bool verify = false;
  bool count_only = false;
  bool sorted = false;
};

struct DumpOptions {
  std::string index = kDefaultIndexPath;
};

std::string read_stream(std::istream& in, const std::string& name) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "read from " + name + " failed");
  return data;
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin, "standard input");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return read_stream(in, path);
}

std::string strip_newlines(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

/// ANSI highlighting for sampled positions, PBWT_IDX_COLOR=never|auto.
class Painter {
 public:
  Painter() {
    const char* env = std::getenv("PBWT_IDX_COLOR");
    std::string mode = env ? env : "auto";
    enabled_ = mode == "auto" && ::isatty(STDOUT_FILENO);
  }
  std::string paint(const std::string& s, bool highlight) const {
    if (!enabled_ || !highlight) return s;
    return "\x1b[31m" + s + "\x1b[0m";
  }

 private:
  bool enabled_ = false;
};

RankMode parse_rank_mode(const std::string& name) {
  return name == "sampled" ? RankMode::Sampled : RankMode::Exact;
}

int cmd_build(const BuildOptions& opt) {
  Alphabet alphabet(opt.alphabet);
  RankMode rank_mode = parse_rank_mode(opt.rank);
  std::string bytes;
  std::ostringstream summary;

  if (opt.mode == "positional") {
    if (opt.input.empty()) throw Error(Errc::InvalidArgument, "positional mode needs --input");
    StringCollection collection = parse_collection(read_input(opt.input), alphabet);
    StoragePolicy policy = StoragePolicy::full();
    if (opt.policy == "sampled") {
      policy = opt.stride ? StoragePolicy::sampled(opt.stride) : StoragePolicy::sampled_default(collection.n());
    } else if (opt.policy == "none") {
      policy = StoragePolicy::none();
    }
    PositionalIndex index = build_index(collection, policy, rank_mode);
    bytes = serialize(index);
    summary << "mode=positional n=" << index.n() << " len=" << index.len() << " sigma=" << alphabet.sigma()
            << " policy=" << policy.describe();
  } else {
    std::string text;
    if (!opt.text.empty()) {
      std::error_code ec;
      text = fs::is_regular_file(opt.text, ec) ? strip_newlines(read_input(opt.text)) : opt.text;
    } else if (!opt.input.empty()) {
      text = strip_newlines(read_input(opt.input));
    } else {
      throw Error(Errc::InvalidArgument, "substring mode needs --text or --input");
    }
    FmIndex index = fm_build(SentinelText(std::move(text), alphabet), opt.sa_stride, rank_mode);
    bytes = serialize(index);
    summary << "mode=substring n=" << index.text_length() << " sigma=" << alphabet.sigma()
            << " sa-stride=" << index.stride() << " samples=" << index.samples().size();
  }
  save_index(opt.output, bytes);
  std::cout << summary.str() << " rank=" << opt.rank << " bytes=" << bytes.size() << " -> " << opt.output
            << "\n";
  return 0;
}

Strategy parse_strategy(const std::string& name) {
  if (name == "binary") return Strategy::Binary;
  if (name == "rebuild") return Strategy::Rebuild;
  return Strategy::Backward;
}

template <typename T>
void print_lines(const std::vector<T>& values) {
  for (const auto& v : values) std::cout << v << "\n";
}

int cmd_query_positional(const QueryOptions& opt) {
  AnyIndex any = load_index(opt.index);
  if (!std::holds_alternative<PositionalIndex>(any)) {
    throw Error(Errc::ModeMismatch, opt.index + " is a substring index");
  }
  const auto& index = std::get<PositionalIndex>(any);
  std::vector<TraceStep> trace;
  PositionalHits hits = index.find(opt.pattern, opt.position, parse_strategy(opt.strategy),
                                   opt.trace ? &trace : nullptr);
  if (opt.trace) {
    for (const auto& step : trace) std::cout << step.column << " " << to_string(step.interval) << "\n";
  }
  std::vector<std::uint32_t> strings = hits.strings;
  if (opt.sorted) std::sort(strings.begin(), strings.end());
  if (opt.count_only) {
    std::cout << hits.interval.width() << "\n";
  } else {
    print_lines(strings);
  }
  if (opt.verify) {
    auto expected = oracle::naive_positional(index.collection(), opt.pattern, opt.position);
    std::sort(strings.begin(), strings.end());
    if (strings != expected || hits.interval.width() != expected.size()) {
      std::cerr << "verify: mismatch against brute-force scan (" << expected.size() << " expected, "
                << strings.size() << " found)\n";
      return kExitMismatch;
    }
    std::cerr << "verify: ok\n";
  }
  return 0;
}

int cmd_query_substring(const QueryOptions& opt) {
  AnyIndex any = load_index(opt.index);
  if (!std::holds_alternative<FmIndex>(any)) {
    throw Error(Errc::ModeMismatch, opt.index + " is a positional index");
  }
  const auto& index = std::get<FmIndex>(any);
  std::vector<CountStep> trace;
  Interval interval = index.count(opt.pattern, opt.trace ? &trace : nullptr);
  if (opt.trace) {
    for (const auto& step : trace) std::cout << step.step << " " << to_string(step.interval) << "\n";
  }
  std::vector<std::size_t> positions;
  if (opt.count_only) {
    std::cout << interval.width() << "\n";
  } else {
    positions = index.locate(interval);
    std::sort(positions.begin(), positions.end());
    print_lines(positions);
  }
  if (opt.verify) {
    auto expected = oracle::naive_substring(index.recover_text(), opt.pattern);
    bool ok = interval.width() == expected.size() && (opt.count_only || positions == expected);
    if (!ok) {
      std::cerr << "verify: mismatch against brute-force scan (" << expected.size() << " expected, "
                << interval.width() << " found)\n";
      return kExitMismatch;
    }
    std::cerr << "verify: ok\n";
  }
  return 0;
}

int cmd_dump(const std::string& what, const DumpOptions& opt) {
  AnyIndex any = load_index(opt.index);
  Painter painter;
  if (what == "bwt") {
    if (!std::holds_alternative<FmIndex>(any)) throw Error(Errc::ModeMismatch, "dump bwt needs a substring index");
    const auto& index = std::get<FmIndex>(any);
    const std::string bwt = index.bwt_string();
    std::string line;
    for (std::size_t r = 0; r < bwt.size(); ++r) {
      // the BWT character at row r sits at a sampled text position iff LF(r) is a sampled row
      line += painter.paint(std::string(1, bwt[r]), index.samples().contains(index.lf_step(r)));
    }
    std::cout << line << "\n";
    return 0;
  }

  if (!std::holds_alternative<PositionalIndex>(any)) {
    throw Error(Errc::ModeMismatch, "dump " + what + " needs a positional index");
  }
  const auto& index = std::get<PositionalIndex>(any);
  const std::size_t n = index.n();
  const std::size_t len = index.len();
  if (what == "pi") {
    std::vector<const Permutation*> columns;
    for (std::size_t j = 0; j < len; ++j) columns.push_back(&index.permutation(j));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < len; ++j) std::cout << (j ? "\t" : "") << (*columns[j])[i];
      std::cout << "\n";
    }
    return 0;
  }
  const auto& matrix = index.matrix();
  const auto& alphabet = index.collection().alphabet();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      std::cout << (j ? "\t" : "")
                << painter.paint(std::string(1, alphabet.symbol(matrix.at(i, j))), index.has_permutation(j));
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positional and substring search with the PBWT and FM-index"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build an index file");
  build_cmd->add_option("--mode", build.mode, "positional or substring")
      ->check(CLI::IsMember({"positional", "substring"}));
  build_cmd->add_option("--input", build.input, "Collection file, one string per line ('-' for stdin)");
  build_cmd->add_option("--text", build.text, "Substring mode: text file path or literal text");
  build_cmd->add_option("--alphabet", build.alphabet, "Ordered symbol string")->capture_default_str();
  build_cmd->add_option("--policy", build.policy, "Stored permutation columns: full, sampled or none")
      ->check(CLI::IsMember({"full", "sampled", "none"}))
      ->capture_default_str();
  build_cmd->add_option("--stride", build.stride, "Column stride for --policy sampled (default ceil(lg n))")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--sa-stride", build.sa_stride, "Text-position sample stride for substring mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build_cmd->add_option("--rank", build.rank, "Rank tables: exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}))
      ->capture_default_str();
  build_cmd->add_option("--output", build.output, "Index file to write")->capture_default_str();

  QueryOptions query;
  auto* query_cmd = app.add_subcommand("query", "Query an index file");
  query_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--index", query.index, "Index file")->capture_default_str();
    cmd->add_option("--pattern", query.pattern, "Pattern")->required();
    cmd->add_flag("--trace", query.trace, "Print the interval after every backward step");
    cmd->add_flag("--verify", query.verify, "Cross-check against a brute-force scan");
    cmd->add_flag("--count-only", query.count_only, "Print only the number of matches");
  };
  auto* query_positional = query_cmd->add_subcommand("positional", "Strings containing the pattern at a position");
  add_common(query_positional);
  query_positional->add_option("--position", query.position, "Start column k")->required();
  query_positional->add_option("--strategy", query.strategy, "binary, backward or rebuild")
      ->check(CLI::IsMember({"binary", "backward", "rebuild"}))
      ->capture_default_str();
  query_positional->add_flag("--sorted", query.sorted, "Sort string indexes instead of row order");
  auto* query_substring = query_cmd->add_subcommand("substring", "Text positions where the pattern occurs");
  add_common(query_substring);

  DumpOptions dump;
  std::string dump_what;
  auto* dump_cmd = app.add_subcommand("dump", "Print index internals");
  dump_cmd->require_subcommand(1);
  for (const char* what : {"pi", "pbwt", "bwt"}) {
    auto* sub = dump_cmd->add_subcommand(what, std::string("Print the ") + what + " table");
    sub->add_option("--index", dump.index, "Index file")->capture_default_str();
    sub->callback([&dump_what, what] { dump_what = what; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(build);
    if (query_positional->parsed()) return cmd_query_positional(query);
    if (query_substring->parsed()) return cmd_query_substring(query);
    if (dump_cmd->parsed()) return cmd_dump(dump_what, dump);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::Io ? kExitIo : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
