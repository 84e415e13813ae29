#include "pbwtidx/serialize.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <optional>

#include "pbwtidx/error.hpp"

namespace pbwtidx {

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) u8(static_cast<std::uint8_t>(v >> s));
  }
  void u64(std::uint64_t v) {
    for (int s = 0; s < 64; s += 8) u8(static_cast<std::uint8_t>(v >> s));
  }
  void bytes(std::string_view b) { out_.append(b); }
  void codes(const std::vector<Symbol>& c) { out_.append(c.begin(), c.end()); }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(in_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int s = 0; s < 32; s += 8) v |= std::uint32_t{u8()} << s;
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int s = 0; s < 64; s += 8) v |= std::uint64_t{u8()} << s;
    return v;
  }
  std::string_view bytes(std::uint64_t count) {
    need(count);
    auto b = in_.substr(pos_, count);
    pos_ += count;
    return b;
  }
  std::vector<Symbol> codes(std::uint64_t count) {
    auto b = bytes(count);
    return {b.begin(), b.end()};
  }
  /// A count of items of `item_size` bytes that must fit in the remaining input.
  std::uint64_t count(std::size_t item_size) {
    std::uint64_t c = u64();
    if (item_size != 0 && c > remaining() / item_size) throw Error(Errc::CorruptIndex, "truncated index file");
    return c;
  }
  std::size_t remaining() const noexcept { return in_.size() - pos_; }
  void finish() const {
    if (pos_ != in_.size()) throw Error(Errc::CorruptIndex, "trailing bytes after index payload");
  }

 private:
  void need(std::uint64_t count) const {
    if (count > remaining()) throw Error(Errc::CorruptIndex, "truncated index file");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

void write_header(Writer& w, IndexMode mode, const Alphabet& alphabet, RankMode rank_mode) {
  w.bytes(kIndexMagic);
  w.u8(static_cast<std::uint8_t>(mode));
  w.u32(static_cast<std::uint32_t>(alphabet.symbols().size()));
  w.bytes(alphabet.symbols());
  w.u8(static_cast<std::uint8_t>(alphabet.sentinel()));
  w.u8(static_cast<std::uint8_t>(rank_mode));
}

void write_ranks(Writer& w, const RankTable& table) {
  w.u64(table.counters().size());
  for (auto c : table.counters()) w.u32(c);
}

RankTable read_ranks(Reader& r, std::span<const Symbol> symbols, std::size_t code_count, RankMode mode) {
  std::uint64_t count = r.count(4);
  std::vector<std::uint32_t> counters(count);
  for (auto& c : counters) c = r.u32();
  return RankTable::from_parts(symbols, code_count, mode, std::move(counters));
}

PositionalIndex read_positional(Reader& r, const Alphabet& alphabet, RankMode rank_mode) {
  const std::uint64_t n = r.u64();
  const std::uint64_t len = r.u64();
  if (n == 0 || len == 0 || n > std::numeric_limits<std::uint32_t>::max() || len > r.remaining() / n) {
    throw Error(Errc::CorruptIndex, "bad collection dimensions");
  }
  const std::uint8_t kind = r.u8();
  const std::uint64_t stride = r.u64();
  StoragePolicy policy = StoragePolicy::full();
  switch (static_cast<StoragePolicy::Kind>(kind)) {
    case StoragePolicy::Kind::Full: break;
    case StoragePolicy::Kind::SampledColumns:
      if (stride == 0) throw Error(Errc::CorruptIndex, "zero column stride");
      policy = StoragePolicy::sampled(stride);
      break;
    case StoragePolicy::Kind::NoPerms: policy = StoragePolicy::none(); break;
    default: throw Error(Errc::CorruptIndex, "unknown storage policy");
  }

  std::vector<std::string> strings;
  strings.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) strings.emplace_back(r.bytes(len));
  StringCollection collection(alphabet, std::move(strings));

  std::map<std::size_t, Permutation> stored;
  const std::uint64_t perm_count = r.count(8 + 4 * n);
  for (std::uint64_t p = 0; p < perm_count; ++p) {
    std::uint64_t j = r.u64();
    Permutation perm(n);
    for (auto& x : perm) x = r.u32();
    if (!stored.emplace(j, std::move(perm)).second) throw Error(Errc::CorruptIndex, "duplicate stored column");
  }

  std::vector<std::vector<Symbol>> columns;
  columns.reserve(len);
  for (std::uint64_t j = 0; j < len; ++j) columns.push_back(r.codes(n));
  std::vector<RankTable> ranks;
  ranks.reserve(len);
  for (std::uint64_t j = 0; j < len; ++j) ranks.push_back(read_ranks(r, columns[j], alphabet.sigma(), rank_mode));

  PbwtMatrix matrix(alphabet, n, std::move(columns), std::move(ranks));
  return PositionalIndex(std::move(collection), std::move(matrix), policy, std::move(stored));
}

FmIndex read_substring(Reader& r, const Alphabet& alphabet, RankMode rank_mode) {
  const std::uint64_t n = r.u64();
  const std::uint64_t stride = r.u64();
  if (n == 0 || n >= r.remaining() || stride == 0) throw Error(Errc::CorruptIndex, "bad text dimensions");
  std::vector<Symbol> bwt = r.codes(n + 1);
  RankTable ranks = read_ranks(r, bwt, alphabet.sigma() + 1, rank_mode);
  std::map<std::size_t, std::size_t> samples;
  const std::uint64_t sample_count = r.count(16);
  for (std::uint64_t s = 0; s < sample_count; ++s) {
    std::uint64_t row = r.u64();
    std::uint64_t pos = r.u64();
    if (!samples.emplace(row, pos).second) throw Error(Errc::CorruptIndex, "duplicate sample row");
  }
  return FmIndex(alphabet, stride, std::move(bwt), std::move(ranks), std::move(samples));
}

}  // namespace

std::string serialize(const PositionalIndex& index) {
  Writer w;
  const auto& matrix = index.matrix();
  RankMode rank_mode = matrix.len() ? matrix.ranks(0).mode() : RankMode::Exact;
  write_header(w, IndexMode::Positional, index.collection().alphabet(), rank_mode);
  w.u64(index.n());
  w.u64(index.len());
  w.u8(static_cast<std::uint8_t>(index.policy().kind()));
  w.u64(index.policy().stride());
  for (const auto& s : index.collection().strings()) w.bytes(s);
  w.u64(index.stored_perms().size());
  for (const auto& [j, perm] : index.stored_perms()) {
    w.u64(j);
    for (auto x : perm) w.u32(x);
  }
  for (std::size_t j = 0; j < matrix.len(); ++j) w.codes(matrix.column(j));
  for (std::size_t j = 0; j < matrix.len(); ++j) write_ranks(w, matrix.ranks(j));
  return w.take();
}

std::string serialize(const FmIndex& index) {
  Writer w;
  write_header(w, IndexMode::Substring, index.alphabet(), index.ranks().mode());
  w.u64(index.text_length());
  w.u64(index.stride());
  w.codes(index.bwt_codes());
  write_ranks(w, index.ranks());
  w.u64(index.samples().size());
  for (const auto& [row, pos] : index.samples()) {
    w.u64(row);
    w.u64(pos);
  }
  return w.take();
}

AnyIndex deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (r.remaining() < kIndexMagic.size() || r.bytes(kIndexMagic.size()) != kIndexMagic) {
    throw Error(Errc::CorruptIndex, "bad magic, not an index file");
  }
  const std::uint8_t mode = r.u8();
  const std::uint32_t symbol_count = r.u32();
  std::string symbols(r.bytes(symbol_count));
  const char sentinel = static_cast<char>(r.u8());
  const std::uint8_t rank_mode = r.u8();
  if (rank_mode > 1) throw Error(Errc::CorruptIndex, "unknown rank mode");

  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(symbols, sentinel);
  } catch (const Error& e) {
    throw Error(Errc::CorruptIndex, std::string("bad alphabet: ") + e.what());
  }

  auto guarded = [&](auto&& read) -> AnyIndex {
    try {
      AnyIndex out = read();
      r.finish();
      return out;
    } catch (const Error& e) {
      if (e.code() == Errc::CorruptIndex) throw;
      throw Error(Errc::CorruptIndex, e.what());
    }
  };
  switch (static_cast<IndexMode>(mode)) {
    case IndexMode::Positional:
      return guarded([&] { return AnyIndex(read_positional(r, *alphabet, static_cast<RankMode>(rank_mode))); });
    case IndexMode::Substring:
      return guarded([&] { return AnyIndex(read_substring(r, *alphabet, static_cast<RankMode>(rank_mode))); });
  }
  throw Error(Errc::CorruptIndex, "unknown index mode");
}

IndexMode mode_of(const AnyIndex& index) noexcept {
  return std::holds_alternative<PositionalIndex>(index) ? IndexMode::Positional : IndexMode::Substring;
}

void save_index(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Io, "write to " + path.string() + " failed");
}

AnyIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "read from " + path.string() + " failed");
  return deserialize(bytes);
}

}  // namespace pbwtidx
