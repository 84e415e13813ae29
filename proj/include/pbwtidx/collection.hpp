#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbwtidx/alphabet.hpp"

namespace pbwtidx {

/// n equal-length strings S_0..S_{n-1} over an alphabet.
///
/// Characters are kept twice: the original strings (for suffix access and
/// re-serialization) and a column-major matrix of symbol codes, so that a
/// column S_0[j] S_1[j] .. S_{n-1}[j] is one contiguous span.
class StringCollection {
 public:
  /// Validates n >= 1, a common length >= 1, and alphabet membership.
  /// Character errors carry 1-based line and column numbers.
  StringCollection(Alphabet alphabet, std::vector<std::string> strings);

  std::size_t n() const noexcept { return strings_.size(); }
  std::size_t len() const noexcept { return len_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  const std::vector<std::string>& strings() const noexcept { return strings_; }
  const std::string& string(std::size_t i) const;

  Symbol code(std::size_t i, std::size_t j) const noexcept { return columns_[j * strings_.size() + i]; }
  std::span<const Symbol> column(std::size_t j) const;

  /// S_i[j..len-1]; empty when j == len.
  std::string suffix(std::size_t i, std::size_t j) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> strings_;
  std::size_t len_ = 0;
  std::vector<Symbol> columns_;
};

/// One string per line; trailing empty lines are ignored.
StringCollection parse_collection(std::string_view text, const Alphabet& alphabet);

/// Inverse of parse_collection: each string followed by '\n'.
std::string serialize_collection(const StringCollection& collection);

}  // namespace pbwtidx
