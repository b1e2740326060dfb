#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KLEINC_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(KLEINC_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("weight enumerator of the hexacode file") {
    const Run r = run("we --code " + data("hexacode.kc"));
    CHECK(r.status == 0);
    CHECK(r.out == "{\"n\":6,\"A\":[1,0,0,0,45,0,18]}\n");
  }

  TEST_CASE("mass") {
    const Run r = run("mass --n 4 --even");
    CHECK(r.status == 0);
    CHECK(r.out == "270\n");
  }

  TEST_CASE("usage and input errors exit with 1") {
    CHECK(run("").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("we --code /nonexistent/file.kc").status == 1);
    CHECK(run("mass").status == 1);
  }

  TEST_CASE("classification table") {
    const Run r = run("classify --n 6 --even --table");
    CHECK(r.status == 0);
    int rows = 0;
    std::size_t pos = 0;
    while ((pos = r.out.find('\n', pos)) != std::string::npos) {
      ++pos;
      if (pos < r.out.size() && r.out[pos] >= '1' && r.out[pos] <= '9') ++rows;
    }
    CHECK(rows == 6);
    CHECK(r.out.find("2160") != std::string::npos);
    CHECK(r.out.find("mass=151470/151470 ok") != std::string::npos);
  }

  TEST_CASE("JSON documents round trip and output is deterministic") {
    for (const std::string args : {"classify --n 4", "cwe --std hexacode", "covering --std hexacode",
                                   "extremal-we --n 12 --even", "nonexist --n 8", "graph --n 4",
                                   "design --std hexacode --weight 4 --t 2", "lex --n 4 --d 3"}) {
      const Run a = run(args), b = run(args);
      CHECK(a.status == 0);
      CHECK(a.out == b.out);
      const auto j = nlohmann::ordered_json::parse(a.out);
      CHECK(j.dump(2) + "\n" == a.out);
    }
  }

  TEST_CASE("worker count does not change results") {
    CHECK(run("classify --n 6 --jobs 1").out == run("classify --n 6 --jobs 3").out);
    CHECK(run("search --n 12 --d 6 --even --jobs 1").out == run("search --n 12 --d 6 --even --jobs 2").out);
  }

  TEST_CASE("code-producing verbs emit the code file format") {
    const Run d = run("dual --code " + data("epsilon2.kc"));
    CHECK(d.status == 0);
    CHECK(d.out.rfind("# length 2\n", 0) == 0);
    const Run n = run("neighbors --std odd-hexacode");
    CHECK(n.status == 0);
    CHECK(nlohmann::json::parse(n.out)["first"].size() == 6);
  }
}
