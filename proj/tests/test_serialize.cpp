#include <filesystem>

#include "doctest.h"
#include "test_support.hpp"

using namespace pbwtidx;
using namespace pbwtidx::testing;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Io;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("header layout") {
    std::string bytes = serialize(build_index(eight_strings(), StoragePolicy::full()));
    CHECK(bytes.substr(0, 8) == "PBWTIDX1");
    CHECK(bytes[8] == 1);
    // u32 little-endian alphabet length, then the symbols
    CHECK(bytes.substr(9, 4) == std::string("\x04\x00\x00\x00", 4));
    CHECK(bytes.substr(13, 4) == "ACGT");
    CHECK(bytes[17] == '$');
    // u64 n = 8
    CHECK(bytes.substr(19, 8) == std::string("\x08\0\0\0\0\0\0\0", 8));

    std::string fm = serialize(fm_build(SentinelText(kText), 5));
    CHECK(fm[8] == 2);
  }

  TEST_CASE("positional round trip preserves every query answer") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 40; ++round) {
      StringCollection c = random_collection(rng, uniform(rng, 1, 16), uniform(rng, 1, 12), uniform(rng, 1, 4));
      StoragePolicy policies[] = {StoragePolicy::full(), StoragePolicy::none(),
                                  StoragePolicy::sampled(uniform(rng, 1, 5))};
      StoragePolicy policy = policies[round % 3];
      RankMode mode = round % 2 ? RankMode::Sampled : RankMode::Exact;
      PositionalIndex original = build_index(c, policy, mode);
      std::string bytes = serialize(original);
      AnyIndex loaded = deserialize(bytes);
      REQUIRE(mode_of(loaded) == IndexMode::Positional);
      const auto& copy = std::get<PositionalIndex>(loaded);
      CHECK(serialize(copy) == bytes);
      CHECK(copy.policy() == policy);
      for (const auto& p : all_patterns(c.alphabet().symbols(), 2)) {
        for (std::size_t k = 0; k + p.size() <= c.len(); ++k) {
          for (auto strategy : {Strategy::Binary, Strategy::Backward, Strategy::Rebuild}) {
            PositionalHits a = original.find(p, k, strategy);
            PositionalHits b = copy.find(p, k, strategy);
            REQUIRE(a.interval == b.interval);
            REQUIRE(a.strings == b.strings);
          }
        }
      }
    }
  }

  TEST_CASE("substring round trip preserves every query answer") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 40; ++round) {
      std::string text = random_string(rng, "ACGT", uniform(rng, 1, 200));
      FmIndex original = fm_build(SentinelText(text), uniform(rng, 1, 8), round % 2 ? RankMode::Sampled : RankMode::Exact);
      std::string bytes = serialize(original);
      AnyIndex loaded = deserialize(bytes);
      REQUIRE(mode_of(loaded) == IndexMode::Substring);
      const auto& copy = std::get<FmIndex>(loaded);
      CHECK(serialize(copy) == bytes);
      CHECK(copy.bwt_string() == original.bwt_string());
      for (const auto& p : all_patterns("ACGT", 3)) {
        Interval a = original.count(p);
        REQUIRE(a == copy.count(p));
        REQUIRE(original.locate(a) == copy.locate(a));
      }
    }
  }

  TEST_CASE("malformed input is rejected as CorruptIndex") {
    std::string good = serialize(build_index(eight_strings(), StoragePolicy::sampled(3)));
    CHECK(error_of([&] { deserialize("NOTANIDX"); }) == Errc::CorruptIndex);
    CHECK(error_of([&] { deserialize(""); }) == Errc::CorruptIndex);
    CHECK(error_of([&] { deserialize(good + "x"); }) == Errc::CorruptIndex);
    for (std::size_t cut = 0; cut < good.size(); cut += 7) {
      CAPTURE(cut);
      CHECK(error_of([&] { deserialize(good.substr(0, cut)); }) == Errc::CorruptIndex);
    }
    std::string bad_mode = good;
    bad_mode[8] = 9;
    CHECK(error_of([&] { deserialize(bad_mode); }) == Errc::CorruptIndex);

    std::string fm = serialize(fm_build(SentinelText(kText), 5));
    for (std::size_t cut = 0; cut < fm.size(); cut += 5) {
      CHECK(error_of([&] { deserialize(fm.substr(0, cut)); }) == Errc::CorruptIndex);
    }
  }

  TEST_CASE("file helpers") {
    auto path = std::filesystem::temp_directory_path() / "pbwtidx_serialize_test.idx";
    save_index(path, serialize(fm_build(SentinelText(kText), 5)));
    AnyIndex loaded = load_index(path);
    CHECK(std::get<FmIndex>(loaded).bwt_string() == "TTTCGGAA$AATA");
    std::filesystem::remove(path);
    CHECK(error_of([&] { load_index(path); }) == Errc::Io);
  }
}
