#include "doctest.h"
#include "test_support.hpp"

using namespace pbwtidx;
using namespace pbwtidx::testing;

TEST_SUITE("oracle") {
  TEST_CASE("positional scan") {
    StringCollection c = eight_strings();
    CHECK(oracle::naive_positional(c, "AGA", 3) == std::vector<std::uint32_t>{1, 4, 5});
    CHECK(oracle::naive_positional(c, "", 0) == identity_permutation(8));
    CHECK(oracle::naive_positional(c, "G", 0) == std::vector<std::uint32_t>{0, 4});
    CHECK(oracle::naive_positional(c, "T", 7) == std::vector<std::uint32_t>{0, 2, 6, 7});
    CHECK_THROWS_AS(oracle::naive_positional(c, "AGA", 6), Error);
  }

  TEST_CASE("substring scan") {
    CHECK(oracle::naive_substring(kText, "TA") == std::vector<std::size_t>{3, 7});
    CHECK(oracle::naive_substring(kText, "ATA") == std::vector<std::size_t>{6});
    CHECK(oracle::naive_substring("ACG", "ACGT").empty());
    CHECK(oracle::naive_substring("AC", "") == std::vector<std::size_t>{0, 1, 2});
    CHECK(oracle::naive_substring("AAAA", "AA") == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("suffix order with ties by index") {
    StringCollection c(Alphabet(), {"CA", "AA", "CA", "AC"});
    CHECK(oracle::naive_suffix_order(c, 0) == std::vector<std::uint32_t>{1, 3, 0, 2});
    CHECK(oracle::naive_suffix_order(c, 1) == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(oracle::naive_suffix_order(c, 2) == std::vector<std::uint32_t>{0, 1, 2, 3});
  }
}
