#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pbwtidx/alphabet.hpp"
#include "pbwtidx/pbwt.hpp"
#include "pbwtidx/rank.hpp"

namespace pbwtidx {

/// A text S over an alphabet, and S$ with the sentinel ranked below every
/// symbol (code 0; symbol a has code a + 1).
class SentinelText {
 public:
  /// Throws EmptyInput for an empty text, UnknownCharacter or ReservedSentinel
  /// for characters outside the alphabet.
  SentinelText(std::string text, Alphabet alphabet = Alphabet());

  const std::string& text() const noexcept { return text_; }
  std::string terminated() const { return text_ + alphabet_.sentinel(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  /// Codes of S$ over alphabet().admitting_sentinel().
  const std::vector<Symbol>& codes() const noexcept { return codes_; }
  std::size_t size() const noexcept { return text_.size(); }

 private:
  std::string text_;
  Alphabet alphabet_;
  std::vector<Symbol> codes_;
};

/// Start positions of the cyclic shifts of S$ in sorted order (the suffix
/// array of S$). Comparison sort over rotation indexes.
std::vector<std::size_t> sorted_rotations(const SentinelText& text);

/// The character cyclically preceding each sorted shift of S$.
std::string bwt_build(const SentinelText& text);

/// PBWT, via the radix-sort modules, of the cyclic shifts of S$ with each shift
/// written twice so that the context after column j <= n is a full rotation.
/// Row count and the first n + 1 columns are what matter.
PbwtMatrix cyclic_shift_pbwt(const SentinelText& text);

/// True iff columns 0..n of cyclic_shift_pbwt are identical and equal bwt_build.
bool verify_column_collapse(const SentinelText& text);

struct CountStep {
  std::size_t step;
  Interval interval;

  bool operator==(const CountStep&) const = default;
};

/// BWT of S$ with rank support and text-position samples at p % stride == 0.
class FmIndex {
 public:
  /// Assembles an index from parts (deserialization). `samples` maps BWT row
  /// to text position. Throws CorruptIndex on inconsistent parts.
  FmIndex(Alphabet alphabet, std::size_t stride, std::vector<Symbol> bwt, RankTable ranks,
          std::map<std::size_t, std::size_t> samples);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t text_length() const noexcept { return bwt_.size() - 1; }
  std::size_t rows() const noexcept { return bwt_.size(); }
  std::size_t stride() const noexcept { return stride_; }

  const std::vector<Symbol>& bwt_codes() const noexcept { return bwt_; }
  std::string bwt_string() const;
  /// Indexed by code; entry 0 is the sentinel.
  const std::vector<std::size_t>& c_array() const noexcept { return c_array_; }
  const RankTable& ranks() const noexcept { return ranks_; }
  const std::map<std::size_t, std::size_t>& samples() const noexcept { return samples_; }
  std::vector<std::size_t> sampled_positions() const;

  /// c_array[bwt[row]] + occ(bwt[row], row): the row of the shift one text
  /// position earlier.
  std::size_t lf_step(std::size_t row) const;

  /// Rows of shifts prefixed by `pattern`, starting from (0, n). `trace`
  /// receives step 0 for the initial interval and one entry per character.
  Interval count(std::string_view pattern, std::vector<CountStep>* trace = nullptr) const;

  /// Text positions for each row of `interval`, in row order. `steps`
  /// receives the LF walk length of each row.
  std::vector<std::size_t> locate(Interval interval, std::vector<std::size_t>* steps = nullptr) const;

  /// S, spelled right to left by following LF from the sentinel row through
  /// every row once. `visited` receives the rows in visiting order.
  std::string recover_text(std::vector<std::size_t>* visited = nullptr) const;

 private:
  Alphabet alphabet_;
  Alphabet coded_;
  std::size_t stride_;
  std::vector<Symbol> bwt_;
  std::vector<std::size_t> c_array_;
  RankTable ranks_;
  std::map<std::size_t, std::size_t> samples_;
};

FmIndex fm_build(const SentinelText& text, std::size_t stride, RankMode mode = RankMode::Exact);

inline std::size_t lf_step(const FmIndex& index, std::size_t row) { return index.lf_step(row); }
inline Interval fm_count(const FmIndex& index, std::string_view pattern) { return index.count(pattern); }
inline std::vector<std::size_t> fm_locate(const FmIndex& index, Interval interval) { return index.locate(interval); }

}  // namespace pbwtidx
