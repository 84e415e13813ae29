#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "test_support.hpp"

using namespace pbwtidx::testing;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PBWTIDX_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("pbwtidx_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("positional build, query and dump") {
    TempDir tmp;
    std::string idx = tmp.file("eight.idx");
    Run built = run("build --mode positional --input " + data_path("collection8.txt") + " --output " + idx);
    REQUIRE(built.status == 0);
    CHECK(built.out.find("n=8 len=8 sigma=4 policy=sampled(3)") != std::string::npos);

    Run q = run("query positional --index " + idx + " --pattern AGA --position 3 --sorted");
    CHECK(q.status == 0);
    CHECK(q.out == "1\n4\n5\n");

    Run traced = run("query positional --index " + idx + " --pattern AGA --position 3 --trace --strategy backward");
    CHECK(traced.out == "6 0 7\n5 0 4\n4 3 5\n3 1 3\n5\n1\n4\n");

    CHECK(run("query positional --index " + idx + " --pattern AGA --position 3 --count-only").out == "3\n");
    CHECK(run("query positional --index " + idx + " --pattern AGA --position 3 --verify").status == 0);
    Run miss = run("query positional --index " + idx + " --pattern AAAA --position 0");
    CHECK(miss.status == 0);
    CHECK(miss.out.empty());

    CHECK(run("query positional --index " + idx + " --pattern AGA --position 7").status == 2);
    CHECK(run("query positional --index " + idx + " --pattern ANA --position 3").status == 2);
    CHECK(run("query substring --index " + idx + " --pattern AGA").status == 2);
    CHECK(run("dump bwt --index " + idx).status == 2);
    // pi_1 is not stored under the default sampled policy
    CHECK(run("dump pi --index " + idx).status == 2);
    CHECK(run("dump pbwt --index " + idx).out == read_file(data_path("pbwt8.tsv")));
  }

  TEST_CASE("full policy dumps the permutation matrix") {
    TempDir tmp;
    std::string idx = tmp.file("full.idx");
    REQUIRE(run("build --mode positional --policy full --input " + data_path("collection8.txt") + " --output " + idx).status == 0);
    CHECK(run("dump pi --index " + idx).out == read_file(data_path("pi8.tsv")));
    for (std::string strategy : {"binary", "backward", "rebuild"}) {
      CHECK(run("query positional --index " + idx + " --pattern AGA --position 3 --strategy " + strategy).out == "5\n1\n4\n");
    }
  }

  TEST_CASE("substring build, query and dump") {
    TempDir tmp;
    std::string idx = tmp.file("text.idx");
    REQUIRE(run("build --mode substring --text GATTAGATACAT --sa-stride 5 --output " + idx).status == 0);
    CHECK(run("dump bwt --index " + idx).out == "TTTCGGAA$AATA\n");
    CHECK(run("query substring --index " + idx + " --pattern TA").out == "3\n7\n");
    CHECK(run("query substring --index " + idx + " --pattern ATA --verify").out == "6\n");
    CHECK(run("query substring --index " + idx + " --pattern TA --count-only").out == "2\n");
    CHECK(run("query substring --index " + idx + " --pattern TA --trace").out == "0 0 12\n1 1 5\n2 10 11\n3\n7\n");
    CHECK(run("dump pi --index " + idx).status == 2);

    // text read from a file
    std::string text_file = tmp.file("text.txt");
    {
      std::ofstream(text_file) << "GATTAGATACAT\n";
    }
    REQUIRE(run("build --mode substring --text " + text_file + " --output " + idx).status == 0);
    CHECK(run("dump bwt --index " + idx).out == "TTTCGGAA$AATA\n");
  }

  TEST_CASE("standard input, custom alphabet and sampled rank tables") {
    TempDir tmp;
    std::string idx = tmp.file("stdin.idx");
    std::string cmd = "build --mode positional --alphabet 01 --rank sampled --policy none --input - --output " + idx;
    std::string full = std::string("printf '0110\\n1010\\n0111\\n' | ") + PBWTIDX_CLI + " " + cmd + " >/dev/null 2>&1";
    REQUIRE(std::system(full.c_str()) == 0);
    CHECK(run("query positional --index " + idx + " --pattern 1 --position 1 --sorted").out == "0\n2\n");
  }

  TEST_CASE("exit codes") {
    TempDir tmp;
    std::string empty = tmp.file("empty.txt");
    { std::ofstream{empty}; }
    CHECK(run("build --mode positional --input " + empty + " --output " + tmp.file("x.idx")).status == 2);
    CHECK(run("build --mode positional --input " + tmp.file("missing.txt") + " --output " + tmp.file("x.idx")).status == 1);
    CHECK(run("query substring --index " + tmp.file("missing.idx") + " --pattern A").status == 1);
    CHECK(run("build --mode positional --input " + data_path("collection8.txt") + " --output " + tmp.path.string() + "/no/such/dir/x.idx").status == 1);
    CHECK(run("build --mode bogus").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("--help").status == 0);
  }
}
