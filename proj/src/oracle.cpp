#include "pbwtidx/oracle.hpp"

#include <algorithm>
#include <string>

#include "pbwtidx/error.hpp"

namespace pbwtidx::oracle {

std::vector<std::uint32_t> naive_positional(const StringCollection& collection, std::string_view pattern,
                                            std::size_t k) {
  if (k + pattern.size() > collection.len()) {
    throw Error(Errc::PatternOverrun, "position " + std::to_string(k) + " + pattern length " +
                                          std::to_string(pattern.size()) + " > len " +
                                          std::to_string(collection.len()));
  }
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < collection.n(); ++i) {
    if (std::string_view(collection.strings()[i]).substr(k, pattern.size()) == pattern) {
      out.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return out;
}

std::vector<std::size_t> naive_substring(std::string_view text, std::string_view pattern) {
  std::vector<std::size_t> out;
  if (pattern.size() > text.size()) return out;
  for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
    if (text.substr(p, pattern.size()) == pattern) out.push_back(p);
  }
  return out;
}

std::vector<std::uint32_t> naive_suffix_order(const StringCollection& collection, std::size_t j) {
  std::vector<std::uint32_t> order(collection.n());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
  const auto& strings = collection.strings();
  const std::string& symbols = collection.alphabet().symbols();
  // compare by alphabet position, not raw bytes
  auto key = [&](std::uint32_t x) {
    std::string k;
    for (char c : std::string_view(strings[x]).substr(j)) k.push_back(static_cast<char>(symbols.find(c)));
    return k;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return key(x) < key(y); });
  return order;
}

}  // namespace pbwtidx::oracle
