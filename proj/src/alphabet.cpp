#include "pbwtidx/alphabet.hpp"

#include "pbwtidx/error.hpp"

namespace pbwtidx {

namespace {

std::string printable(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f) return std::string("'") + c + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("0x") + kHex[u >> 4] + kHex[u & 0xf];
}

}  // namespace

Alphabet::Alphabet() : Alphabet(kDefaultSymbols, kDefaultSentinel) {}

Alphabet::Alphabet(std::string_view symbols, char sentinel)
    : symbols_(symbols), sentinel_(sentinel) {
  if (symbols_.empty()) throw Error(Errc::InvalidArgument, "alphabet has no symbols");
  // code 0 is taken by the sentinel on the substring side
  if (symbols_.size() > 255) throw Error(Errc::InvalidArgument, "alphabet has more than 255 symbols");
  for (std::size_t i = 1; i < symbols_.size(); ++i) {
    if (static_cast<unsigned char>(symbols_[i - 1]) >= static_cast<unsigned char>(symbols_[i])) {
      throw Error(Errc::InvalidArgument, "alphabet symbols must be strictly increasing, got " +
                                             printable(symbols_[i - 1]) + " before " +
                                             printable(symbols_[i]));
    }
  }
  if (symbols_.find(sentinel_) != std::string::npos) {
    throw Error(Errc::InvalidArgument, "sentinel " + printable(sentinel_) + " is an alphabet symbol");
  }
  index_symbols();
}

Alphabet::Alphabet(Unchecked, std::string symbols, char sentinel, bool admitted)
    : symbols_(std::move(symbols)), sentinel_(sentinel), sentinel_admitted_(admitted) {
  index_symbols();
}

void Alphabet::index_symbols() {
  rank_of_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    rank_of_[static_cast<unsigned char>(symbols_[i])] = static_cast<std::int16_t>(i);
  }
}

Error Alphabet::rejection(char c, std::string_view where) const {
  std::string prefix = where.empty() ? std::string() : std::string(where) + ": ";
  if (c == sentinel_) {
    return Error(Errc::ReservedSentinel, prefix + "sentinel " + printable(c) + " is not allowed in input");
  }
  return Error(Errc::UnknownCharacter,
               prefix + "character " + printable(c) + " is not in alphabet \"" + symbols_ + "\"");
}

Symbol Alphabet::rank(char c) const {
  auto r = rank_of_[static_cast<unsigned char>(c)];
  if (r < 0) throw rejection(c, {});
  return static_cast<Symbol>(r);
}

char Alphabet::symbol(std::size_t a) const {
  if (a >= symbols_.size()) {
    throw Error(Errc::RankOutOfRange,
                "rank " + std::to_string(a) + " >= sigma " + std::to_string(symbols_.size()));
  }
  return symbols_[a];
}

std::vector<Symbol> Alphabet::encode(std::string_view text) const {
  std::vector<Symbol> codes(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto r = rank_of_[static_cast<unsigned char>(text[i])];
    if (r < 0) throw rejection(text[i], "offset " + std::to_string(i));
    codes[i] = static_cast<Symbol>(r);
  }
  return codes;
}

std::string Alphabet::decode(const std::vector<Symbol>& codes) const {
  std::string out;
  out.reserve(codes.size());
  for (Symbol a : codes) out.push_back(symbol(a));
  return out;
}

Alphabet Alphabet::admitting_sentinel() const {
  if (sentinel_admitted_) return *this;
  return Alphabet(Unchecked{}, std::string(1, sentinel_) + symbols_, sentinel_, true);
}

}  // namespace pbwtidx
