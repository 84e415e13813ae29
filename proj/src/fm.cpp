#include "pbwtidx/fm.hpp"

#include <algorithm>

#include "pbwtidx/collection.hpp"
#include "pbwtidx/error.hpp"
#include "pbwtidx/kernels.hpp"
#include "pbwtidx/permutations.hpp"

namespace pbwtidx {

SentinelText::SentinelText(std::string text, Alphabet alphabet)
    : text_(std::move(text)), alphabet_(std::move(alphabet)) {
  if (text_.empty()) throw Error(Errc::EmptyInput, "text is empty");
  codes_ = alphabet_.encode(text_);
  for (Symbol& c : codes_) ++c;
  codes_.push_back(0);
}

std::vector<std::size_t> sorted_rotations(const SentinelText& text) {
  const auto& codes = text.codes();
  const std::size_t total = codes.size();
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  // The unique sentinel decides every comparison within `total` characters.
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    for (std::size_t t = 0; t < total; ++t) {
      Symbol a = codes[(x + t) % total];
      Symbol b = codes[(y + t) % total];
      if (a != b) return a < b;
    }
    return false;
  });
  return order;
}

namespace {

std::vector<Symbol> bwt_codes_from(const SentinelText& text, const std::vector<std::size_t>& order) {
  const auto& codes = text.codes();
  const std::size_t total = codes.size();
  std::vector<Symbol> bwt(total);
  for (std::size_t r = 0; r < total; ++r) bwt[r] = codes[(order[r] + total - 1) % total];
  return bwt;
}

}  // namespace

std::string bwt_build(const SentinelText& text) {
  return text.alphabet().admitting_sentinel().decode(bwt_codes_from(text, sorted_rotations(text)));
}

PbwtMatrix cyclic_shift_pbwt(const SentinelText& text) {
  const std::string terminated = text.terminated();
  const std::size_t total = terminated.size();
  std::vector<std::string> rows;
  rows.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::string shift = terminated.substr(i) + terminated.substr(0, i);
    rows.push_back(shift + shift);
  }
  StringCollection shifts(text.alphabet().admitting_sentinel(), std::move(rows));
  return build_pbwt(shifts, build_permutations(shifts));
}

bool verify_column_collapse(const SentinelText& text) {
  PbwtMatrix matrix = cyclic_shift_pbwt(text);
  const std::string bwt = bwt_build(text);
  for (std::size_t j = 0; j < text.codes().size(); ++j) {
    if (matrix.column_string(j) != bwt) return false;
  }
  return true;
}

FmIndex::FmIndex(Alphabet alphabet, std::size_t stride, std::vector<Symbol> bwt, RankTable ranks,
                 std::map<std::size_t, std::size_t> samples)
    : alphabet_(std::move(alphabet)),
      coded_(alphabet_.admitting_sentinel()),
      stride_(stride),
      bwt_(std::move(bwt)),
      ranks_(std::move(ranks)),
      samples_(std::move(samples)) {
  if (stride_ == 0) throw Error(Errc::InvalidArgument, "sample stride must be >= 1");
  if (bwt_.size() < 2) throw Error(Errc::CorruptIndex, "BWT shorter than two characters");
  const std::size_t codes = coded_.sigma();
  if (ranks_.size() != bwt_.size() || ranks_.code_count() != codes) {
    throw Error(Errc::CorruptIndex, "rank table does not match the BWT");
  }
  std::size_t sentinels = 0;
  for (Symbol s : bwt_) {
    if (s >= codes) throw Error(Errc::CorruptIndex, "BWT symbol out of range");
    sentinels += (s == 0);
  }
  if (sentinels != 1) throw Error(Errc::CorruptIndex, "BWT must contain exactly one sentinel");

  c_array_.resize(codes);
  for (std::size_t a = 0; a < codes; ++a) c_array_[a] = kernels::count_less(bwt_, static_cast<Symbol>(a));

  const std::size_t n = text_length();
  if (samples_.size() != n / stride_ + 1) throw Error(Errc::CorruptIndex, "sample count does not match stride");
  std::vector<bool> seen(n + 1, false);
  for (const auto& [row, pos] : samples_) {
    if (row > n || pos > n || pos % stride_ != 0 || seen[pos]) {
      throw Error(Errc::CorruptIndex, "invalid suffix-array sample");
    }
    seen[pos] = true;
  }
}

std::string FmIndex::bwt_string() const { return coded_.decode(bwt_); }

std::vector<std::size_t> FmIndex::sampled_positions() const {
  std::vector<std::size_t> out;
  out.reserve(samples_.size());
  for (const auto& [row, pos] : samples_) out.push_back(pos);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FmIndex::lf_step(std::size_t row) const {
  if (row >= bwt_.size()) {
    throw Error(Errc::IndexOutOfRange, "row " + std::to_string(row) + " > n " + std::to_string(text_length()));
  }
  Symbol a = bwt_[row];
  return c_array_[a] + ranks_.rank(a, row);
}

Interval FmIndex::count(std::string_view pattern, std::vector<CountStep>* trace) const {
  std::vector<Symbol> codes = alphabet_.encode(pattern);
  Interval interval = Interval::full(rows());
  if (trace) trace->push_back({0, interval});
  for (std::size_t t = codes.size(); t-- > 0;) {
    Symbol a = static_cast<Symbol>(codes[t] + 1);
    interval = backward_step(ranks_, c_array_[a], interval, a);
    if (trace) trace->push_back({codes.size() - t, interval});
  }
  return interval;
}

std::vector<std::size_t> FmIndex::locate(Interval interval, std::vector<std::size_t>* steps) const {
  std::vector<std::size_t> out;
  if (interval.is_empty()) return out;
  if (interval.last() >= rows()) throw Error(Errc::IndexOutOfRange, "interval " + to_string(interval) + " exceeds n");
  out.reserve(interval.width());
  for (std::size_t r = interval.first(); r <= interval.last(); ++r) {
    std::size_t row = r;
    std::size_t d = 0;
    auto it = samples_.find(row);
    while (it == samples_.end()) {
      row = lf_step(row);
      ++d;
      it = samples_.find(row);
    }
    out.push_back(it->second + d);
    if (steps) steps->push_back(d);
  }
  return out;
}

std::string FmIndex::recover_text(std::vector<std::size_t>* visited) const {
  const std::size_t n = text_length();
  std::string reversed;
  reversed.reserve(n);
  // row 0 holds the shift starting at the sentinel; its BWT character is S[n-1]
  std::size_t row = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (visited) visited->push_back(row);
    if (bwt_[row] != 0) reversed.push_back(coded_.symbol(bwt_[row]));
    row = lf_step(row);
  }
  return std::string(reversed.rbegin(), reversed.rend());
}

FmIndex fm_build(const SentinelText& text, std::size_t stride, RankMode mode) {
  if (stride == 0) throw Error(Errc::InvalidArgument, "sample stride must be >= 1");
  std::vector<std::size_t> order = sorted_rotations(text);
  std::vector<Symbol> bwt = bwt_codes_from(text, order);
  std::map<std::size_t, std::size_t> samples;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (order[r] % stride == 0) samples.emplace(r, order[r]);
  }
  RankTable ranks(bwt, text.alphabet().sigma() + 1, mode);
  return FmIndex(text.alphabet(), stride, std::move(bwt), std::move(ranks), std::move(samples));
}

}  // namespace pbwtidx
