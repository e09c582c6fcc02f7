#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = brcov::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kZ2 = "gens a,b; rels [a,b]; meridians m1=a,m2=b";

}  // namespace

TEST_CASE("classify examples") {
  const Run r = invoke({"classify", "--inline", kZ2, "--degree", "16", "--require-branched", "all"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["classes"] == 3);

  const Run z = invoke({"classify", "--inline", "gens a; meridians m=a", "--degree", "7", "--require-branched", "all"});
  REQUIRE(z.code == 0);
  CHECK(nlohmann::json::parse(z.out)["summary"]["classes"] == 1);

  const Run sym = invoke({"classify", "--inline", kZ2, "--degree", "16", "--mod-symmetry", "--format", "text"});
  CHECK(sym.code == 0);
  CHECK(sym.out.find("classes up to coordinate symmetry: 2") != std::string::npos);
  CHECK(sym.out.find("(4,4)") != std::string::npos);
}

TEST_CASE("classify flags") {
  const Run up = invoke({"classify", "--inline", "gens a; meridians m=a", "--degree", "6", "--up-to"});
  REQUIRE(up.code == 0);
  CHECK(nlohmann::json::parse(up.out)["summary"]["classes"] == 5);  // degrees 2..6

  const Run none = invoke({"classify", "--inline", kZ2, "--degree", "4", "--require-branched", "none"});
  CHECK(nlohmann::json::parse(none.out)["summary"]["classes"] == 3);
  const Run all = invoke({"classify", "--inline", kZ2, "--degree", "4", "--require-branched", "none", "--all-subgroups"});
  CHECK(nlohmann::json::parse(all.out)["summary"]["classes"] == 7);
  const Run one = invoke({"classify", "--inline", kZ2, "--degree", "4", "--require-branched", "m1"});
  CHECK(nlohmann::json::parse(one.out)["summary"]["classes"] == 2);

  const Run normal = invoke({"classify", "--inline", "gens a,b", "--degree", "3", "--only-normal",
                            "--require-branched", "none"});
  CHECK(nlohmann::json::parse(normal.out)["summary"]["classes"] == 4);

  const Run off = invoke({"classify", "--inline", kZ2, "--degree", "16", "--lattice", "off"});
  const auto jo = nlohmann::json::parse(off.out);
  CHECK(jo["lattice_path"] == false);
  CHECK(jo["summary"]["classes"] == 3);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"classify", "--inline", kZ2, "--degree", "0"}).code == 1);
  CHECK(invoke({"classify", "--inline", "gens a; rels b", "--degree", "2"}).code == 1);
  CHECK(invoke({"classify", "--degree", "2"}).code == 1);
  CHECK(invoke({"classify", "--inline", kZ2, "--file", "x", "--degree", "2"}).code == 1);
  CHECK(invoke({"classify", "--file", "/nonexistent/p.txt", "--degree", "2"}).code == 1);
  CHECK(invoke({"classify", "--inline", kZ2, "--degree", "2", "--require-branched", "m7"}).code == 1);
  CHECK(invoke({"classify", "--inline", kZ2, "--degree", "2", "--lattice", "maybe"}).code == 1);
  CHECK(invoke({"classify", "--inline", "gens a,b", "--degree", "2", "--mod-symmetry"}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"classify", "--inline", kZ2, "--degree", "3", "--expect-nonempty"}).code == 2);
  CHECK(invoke({"classify", "--inline", kZ2, "--degree", "3"}).code == 0);
  CHECK(invoke({"classify", "--inline", kZ2, "--degree", "16", "--max-cosets", "8"}).code == 3);
  CHECK(invoke({"cosets", "--inline", "gens a", "--subgroup", "1", "--max-cosets", "200"}).code == 3);
}

TEST_CASE("count examples") {
  const Run f = invoke({"count", "--free-rank", "2", "--degree", "3"});
  REQUIRE(f.code == 0);
  CHECK(f.out.find("subgroups: 13") != std::string::npos);
  CHECK(f.out.find("(agrees)") != std::string::npos);
  CHECK(invoke({"count", "--free-rank", "1", "--degree", "9"}).out.find("subgroups: 1\n") != std::string::npos);
  const Run z2 = invoke({"count", "--inline", "gens a,b; rels [a,b]", "--degree", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(z2.out)["subgroups"] == 3);
}

TEST_CASE("file input and other subcommands") {
  const std::string path = "brcov_cli_test_presentation.json";
  {
    std::ofstream f(path);
    f << R"({"generators": ["x", "y"], "relators": ["x y x^-1 y^-1"], "meridians": {"m1": "x", "m2": "y"}})";
  }
  const Run r = invoke({"classify", "--file", path, "--degree", "16"});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["summary"]["classes"] == 3);

  const Run tc = invoke({"cosets", "--inline", kZ2, "--subgroup", "a^4, b^4"});
  REQUIRE(tc.code == 0);
  CHECK(nlohmann::json::parse(tc.out)["degree"] == 16);

  const Run lat = invoke({"sublattices", "--rank", "2", "--degree", "16"});
  REQUIRE(lat.code == 0);
  CHECK(nlohmann::json::parse(lat.out).size() == 31);
  const Run split = invoke({"sublattices", "--rank", "2", "--degree", "16", "--split-only"});
  CHECK(nlohmann::json::parse(split.out).size() == 5);
}

TEST_CASE("output does not depend on the thread count") {
  for (const char* k : {"4", "5"}) {
    const Run one = invoke({"classify", "--inline", "gens a,b,c", "--degree", k, "--threads", "1"});
    const Run eight = invoke({"classify", "--inline", "gens a,b,c", "--degree", k, "--threads", "8"});
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
  }
}

TEST_CASE("corpus run") {
  const Run r = invoke({"corpus"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  std::size_t prime_lines = 0;
  for (std::size_t pos = 0; (pos = r.out.find("prime degree", pos)) != std::string::npos; ++pos) ++prime_lines;
  CHECK(prime_lines == 25);
}
