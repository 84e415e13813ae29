#include "doctest.h"
#include "test_support.hpp"

using namespace pbwtidx;
using namespace pbwtidx::testing;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Independent BWT: materialize and sort every rotation of S$ as a string,
// with '$' mapped below all letters.
std::string brute_force_bwt(const std::string& text) {
  std::string t = text + '\x01';
  std::vector<std::string> rotations;
  for (std::size_t i = 0; i < t.size(); ++i) rotations.push_back(t.substr(i) + t.substr(0, i));
  std::sort(rotations.begin(), rotations.end());
  std::string out;
  for (const auto& r : rotations) out.push_back(r.back() == '\x01' ? '$' : r.back());
  return out;
}

}  // namespace

TEST_SUITE("fm") {
  TEST_CASE("sentinel text") {
    SentinelText t(kText);
    CHECK(t.terminated() == "GATTAGATACAT$");
    CHECK(t.codes().size() == 13);
    CHECK(t.codes().back() == 0);
    CHECK(std::count(t.codes().begin(), t.codes().end(), 0) == 1);
    CHECK_THROWS_AS(SentinelText("GA$T"), Error);
    CHECK_THROWS_AS(SentinelText("GANT"), Error);
    CHECK_THROWS_AS(SentinelText(""), Error);
  }

  TEST_CASE("BWT of the example texts") {
    CHECK(bwt_build(SentinelText(kText)) == "TTTCGGAA$AATA");
    CHECK(bwt_build(SentinelText("A")) == "A$");
    // periodic text: frozen from the brute-force rotation sort
    CHECK(bwt_build(SentinelText("GATAGATA")) == "ATTGGA$AA");
    CHECK(brute_force_bwt("GATAGATA") == "ATTGGA$AA");
    CHECK(sorted_rotations(SentinelText(kText)) ==
          std::vector<std::size_t>{12, 8, 4, 10, 6, 1, 9, 5, 0, 11, 7, 3, 2});
  }

  TEST_CASE("BWT matches the brute-force rotation sort and permutes S$") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 100; ++round) {
      std::string text = random_string(rng, "ACGT", uniform(rng, 1, 80));
      std::string bwt = bwt_build(SentinelText(text));
      CHECK(bwt == brute_force_bwt(text));
      std::string a = bwt, b = text + "$";
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  TEST_CASE("cyclic-shift PBWT columns collapse to the BWT") {
    CHECK(verify_column_collapse(SentinelText(kText)));
    PbwtMatrix m = cyclic_shift_pbwt(SentinelText(kText));
    for (std::size_t j = 0; j < 13; ++j) CHECK(m.column_string(j) == "TTTCGGAA$AATA");
    CHECK(verify_column_collapse(SentinelText("A")));
    CHECK(verify_column_collapse(SentinelText("GATAGATA")));

    std::mt19937_64 rng(29);
    for (int round = 0; round < 50; ++round) {
      std::string text = random_string(rng, "ACGT", uniform(rng, 1, 64));
      CHECK(verify_column_collapse(SentinelText(text)));
    }
  }

  TEST_CASE("diagonal samples") {
    FmIndex index = fm_build(SentinelText(kText), 5);
    CHECK(index.sampled_positions() == std::vector<std::size_t>{0, 5, 10});
    CHECK(index.samples().size() == 3);

    FmIndex every = fm_build(SentinelText(kText), 1);
    CHECK(every.samples().size() == 13);
    std::vector<std::size_t> steps;
    every.locate(Interval::full(13), &steps);
    CHECK(std::all_of(steps.begin(), steps.end(), [](std::size_t d) { return d == 0; }));
    CHECK_THROWS_AS(fm_build(SentinelText(kText), 0), Error);
  }

  TEST_CASE("LF mapping") {
    FmIndex a = fm_build(SentinelText("A"), 1);
    CHECK(lf_step(a, 0) == 1);
    CHECK(lf_step(a, 1) == 0);
    CHECK_THROWS_AS(a.lf_step(2), Error);

    FmIndex index = fm_build(SentinelText(kText), 5);
    std::vector<bool> hit(index.rows(), false);
    for (std::size_t r = 0; r < index.rows(); ++r) hit[index.lf_step(r)] = true;
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));

    // LF from row r lands on the rotation one position earlier
    auto order = sorted_rotations(SentinelText(kText));
    for (std::size_t r = 0; r < index.rows(); ++r) {
      CHECK(order[index.lf_step(r)] == (order[r] + 12) % 13);
    }

    std::vector<std::size_t> visited;
    CHECK(index.recover_text(&visited) == kText);
    std::sort(visited.begin(), visited.end());
    for (std::size_t r = 0; r < visited.size(); ++r) CHECK(visited[r] == r);
  }

  TEST_CASE("count and locate on the example text") {
    FmIndex index = fm_build(SentinelText(kText), 5);
    CHECK(fm_count(index, "TA").width() == 2);
    CHECK(fm_count(index, "ATA").width() == 1);
    CHECK(fm_count(index, "") == Interval(0, 12));
    CHECK(fm_count(index, "GGG").is_empty());
    CHECK(sorted(fm_locate(index, fm_count(index, "TA"))) == std::vector<std::size_t>{3, 7});
    CHECK(fm_locate(index, fm_count(index, "ATA")) == std::vector<std::size_t>{6});
    CHECK(fm_locate(index, Interval::empty()).empty());
    CHECK_THROWS_AS(index.count("TN"), Error);
    CHECK_THROWS_AS(index.count("T$"), Error);

    std::vector<CountStep> trace;
    index.count("TA", &trace);
    REQUIRE(trace.size() == 3);
    CHECK(trace[0] == CountStep{0, Interval(0, 12)});
  }

  TEST_CASE("count, locate and step bound against the brute-force scan") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 60; ++round) {
      std::size_t sigma = uniform(rng, 1, 4);
      std::string symbols = std::string("ACGT").substr(0, sigma);
      std::string text = random_string(rng, symbols, uniform(rng, 1, 256));
      SentinelText st(text, Alphabet(symbols));
      for (std::size_t stride : {1, 2, 4, 8}) {
        FmIndex index = fm_build(st, stride, stride == 4 ? RankMode::Sampled : RankMode::Exact);
        REQUIRE(index.recover_text() == text);
        for (std::size_t m = 0; m <= 5; ++m) {
          for (int trial = 0; trial < 6; ++trial) {
            std::string pattern = random_string(rng, symbols, m);
            auto expected = oracle::naive_substring(text, pattern);
            Interval interval = index.count(pattern);
            REQUIRE(interval.width() == expected.size());
            std::vector<std::size_t> steps;
            REQUIRE(sorted(index.locate(interval, &steps)) == expected);
            for (auto d : steps) REQUIRE(d < stride);
          }
        }
      }
    }
  }
}
