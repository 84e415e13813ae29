#include "doctest.h"
#include "test_support.hpp"

using namespace pbwtidx;

TEST_SUITE("alphabet") {
  TEST_CASE("default alphabet ranks ACGT in order") {
    Alphabet dna;
    CHECK(dna.sigma() == 4);
    CHECK(dna.sentinel() == '$');
    CHECK(dna.rank('A') == 0);
    CHECK(dna.rank('C') == 1);
    CHECK(dna.rank('G') == 2);
    CHECK(dna.rank('T') == 3);
  }

  TEST_CASE("symbol is the inverse of rank") {
    Alphabet dna;
    CHECK(dna.symbol(0) == 'A');
    CHECK(dna.symbol(2) == 'G');
    for (std::size_t a = 0; a < dna.sigma(); ++a) CHECK(dna.rank(dna.symbol(a)) == a);
  }

  TEST_CASE("unknown characters and out-of-range ranks") {
    Alphabet dna;
    auto code_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      FAIL("no error raised");
      return Errc::Io;
    };
    CHECK(code_of([&] { dna.rank('N'); }) == Errc::UnknownCharacter);
    CHECK(code_of([&] { dna.rank('a'); }) == Errc::UnknownCharacter);
    CHECK(code_of([&] { dna.rank('$'); }) == Errc::ReservedSentinel);
    CHECK(code_of([&] { dna.symbol(4); }) == Errc::RankOutOfRange);
    CHECK(code_of([&] { dna.encode("ACGN"); }) == Errc::UnknownCharacter);
  }

  TEST_CASE("construction rejects unordered, duplicate, or sentinel symbols") {
    CHECK_THROWS_AS(Alphabet("CA"), Error);
    CHECK_THROWS_AS(Alphabet("AAC"), Error);
    CHECK_THROWS_AS(Alphabet("$AC"), Error);
    CHECK_THROWS_AS(Alphabet(""), Error);
    CHECK_NOTHROW(Alphabet("01", '#'));
  }

  TEST_CASE("round trip and order preservation for sigma 2..26") {
    for (std::size_t sigma = 2; sigma <= 26; ++sigma) {
      std::string symbols;
      for (std::size_t i = 0; i < sigma; ++i) symbols.push_back(static_cast<char>('a' + i));
      Alphabet alphabet(symbols);
      REQUIRE(alphabet.sigma() == sigma);
      for (std::size_t a = 0; a < sigma; ++a) CHECK(alphabet.rank(alphabet.symbol(a)) == a);
      for (std::size_t a = 1; a < sigma; ++a) CHECK(alphabet.rank(symbols[a - 1]) < alphabet.rank(symbols[a]));
    }
  }

  TEST_CASE("admitting the sentinel shifts user symbols up by one") {
    Alphabet coded = Alphabet().admitting_sentinel();
    CHECK(coded.sigma() == 5);
    CHECK(coded.rank('$') == 0);
    CHECK(coded.rank('A') == 1);
    CHECK(coded.rank('T') == 4);
    CHECK(coded.sentinel_admitted());
  }
}
