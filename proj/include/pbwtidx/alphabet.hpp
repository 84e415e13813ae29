#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pbwtidx/error.hpp"

namespace pbwtidx {

/// Dense rank of a character within an alphabet.
using Symbol = std::uint8_t;

/// Ordered character set with a reserved sentinel.
///
/// Symbols must be strictly increasing in byte order. The sentinel is never a
/// member of the user alphabet; it only enters through
/// `admitting_sentinel()`, which the substring index uses to rank it below
/// every symbol.
class Alphabet {
 public:
  static constexpr char kDefaultSentinel = '$';
  static constexpr std::string_view kDefaultSymbols = "ACGT";

  Alphabet();
  explicit Alphabet(std::string_view symbols, char sentinel = kDefaultSentinel);

  std::size_t sigma() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char sentinel() const noexcept { return sentinel_; }

  bool contains(char c) const noexcept { return rank_of_[static_cast<unsigned char>(c)] >= 0; }

  /// Rank of `c` in [0, sigma). Throws UnknownCharacter, or ReservedSentinel
  /// when `c` is the sentinel of a user alphabet.
  Symbol rank(char c) const;

  /// Inverse of rank(). Throws RankOutOfRange when a >= sigma.
  char symbol(std::size_t a) const;

  /// Encodes a whole string; errors report the 0-based offset of the bad character.
  std::vector<Symbol> encode(std::string_view text) const;
  std::string decode(const std::vector<Symbol>& codes) const;

  /// The alphabet with the sentinel prepended as symbol 0 and every user
  /// symbol shifted up by one.
  Alphabet admitting_sentinel() const;
  bool sentinel_admitted() const noexcept { return sentinel_admitted_; }

  /// The error rank() would raise for `c`, with `where` prefixed to the detail.
  Error rejection(char c, std::string_view where) const;

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_ && sentinel_ == other.sentinel_ &&
           sentinel_admitted_ == other.sentinel_admitted_;
  }

 private:
  struct Unchecked {};
  Alphabet(Unchecked, std::string symbols, char sentinel, bool admitted);
  void index_symbols();

  std::string symbols_;
  char sentinel_;
  bool sentinel_admitted_ = false;
  std::array<std::int16_t, 256> rank_of_{};
};

}  // namespace pbwtidx
