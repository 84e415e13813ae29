#pragma once

// Brute-force reference answers. Deliberately independent of the index
// modules: plain string comparisons only.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pbwtidx/collection.hpp"

namespace pbwtidx::oracle {

/// {i : S_i[k..k+m-1] == pattern}, ascending. Throws PatternOverrun when k + m > len.
std::vector<std::uint32_t> naive_positional(const StringCollection& collection, std::string_view pattern,
                                            std::size_t k);

/// Every p with text[p..p+m-1] == pattern, ascending. The empty pattern
/// matches at 0..|text| inclusive.
std::vector<std::size_t> naive_substring(std::string_view text, std::string_view pattern);

/// String indexes ordered by S_i[j..], ties by ascending index.
std::vector<std::uint32_t> naive_suffix_order(const StringCollection& collection, std::size_t j);

}  // namespace pbwtidx::oracle
