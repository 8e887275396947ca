#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "traag/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = traag::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TRAAG_TEST_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("traag_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("documented examples") {
  auto eq = run({"eq", "-f", data("klein.tg"), "-w1", "a b a", "-w2", "b"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "equal\n");

  auto an = run({"analyze", "-f", data("p4.tg"), "--json"});
  CHECK(an.code == 0);
  CHECK(json::parse(an.out)["lerf"] == false);

  auto nf = run({"nf", "-f", data("free2.tg"), "-w", "a a^-1"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "1\n");
}

TEST_CASE("negative decisions exit 10") {
  CHECK(run({"eq", "-f", data("free2.tg"), "-w1", "a b", "-w2", "b a"}).code == 10);
  CHECK(run({"eq", "-f", data("z2.tg"), "-w1", "a b", "-w2", "b a"}).code == 0);
  CHECK(run({"inr", "-f", data("p4.tg")}).code == 10);
  CHECK(run({"inr", "-f", data("star_out.tg")}).code == 10);
  CHECK(run({"rewrite", "-f", data("apex_terminus.tg"), "-x", "x", "-w", "a x"}).code == 10);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"nf", "-w", "a"}).code == 1);
  CHECK(run({"nf", "-f", data("does_not_exist.tg"), "-w", "a"}).code == 1);
  CHECK(run({"eq", "-f", data("z2.tg"), "-w1", "a"}).code == 1);
  CHECK(run({"oracle", "-f", data("z2.tg"), "-w", "a", "-r", "many"}).code == 1);
}

TEST_CASE("parse errors exit 2") {
  auto bad = run({"analyze", "-f", data("broken.tg")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"nf", "-f", data("z2.tg"), "-w", "a^0"}).code == 2);
  CHECK(run({"nf", "-f", data("z2.tg"), "-w", "q"}).code == 2);
}

TEST_CASE("precondition violations exit 3") {
  auto r = run({"subgroup", "-f", data("p4.tg"), "-x", "b"});
  CHECK(r.code == 3);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"subgroup", "-f", data("p4.tg"), "-x", "q"}).code == 3);
  CHECK(run({"enum", "-n", "6", "--out", scratch("enum6").string()}).code == 3);
}

TEST_CASE("class R output") {
  auto text = run({"inr", "-f", data("klein.tg")});
  CHECK(text.code == 0);
  CHECK(text.out.rfind("in class R", 0) == 0);
  auto j = json::parse(run({"inr", "-f", data("klein.tg"), "--json"}).out);
  CHECK(j["in_class_r"] == true);
  CHECK(j["decomposition"]["cone"]["tip"] == "b");
}

TEST_CASE("subgroup and rewrite") {
  auto s = run({"subgroup", "-f", data("apex_terminus.tg"), "-x", "x", "--verify", "--json"});
  CHECK(s.code == 0);
  auto j = json::parse(s.out);
  CHECK(j["new_generator"] == "x_sq");
  CHECK(j["conjugation_table"]["a"] == "inverted");
  CHECK(j["verification"]["all_passed"] == true);
  CHECK(j["generator_map"]["x_sq"] == "x^2");

  auto r = run({"rewrite", "-f", data("apex_terminus.tg"), "-x", "x", "-w", "x a x"});
  CHECK(r.code == 0);
  CHECK(r.out == "a^-1 x_sq\n");
  auto nf = run({"rewrite", "-f", data("apex_terminus.tg"), "-x", "x", "-w", "x^-1 a x", "--delta-nf", "--json"});
  CHECK(json::parse(nf.out)["rewritten"] == "a^-1");
}

TEST_CASE("word files") {
  auto dir = scratch("words");
  std::ofstream(dir / "w1.txt") << "a b a\n";
  std::ofstream(dir / "w2.txt") << "b";
  CHECK(run({"eq", "-f", data("klein.tg"), "--word-file1", (dir / "w1.txt").string(), "--word-file2",
             (dir / "w2.txt").string()})
            .code == 0);
  auto nf = run({"nf", "-f", data("klein.tg"), "--word-file", (dir / "w1.txt").string()});
  CHECK(nf.out == "b\n");
  CHECK(run({"nf", "-f", data("klein.tg"), "-w", "a", "--word-file", (dir / "w1.txt").string()}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("enumeration writes every graph") {
  auto dir = scratch("enum");
  auto r = run({"enum", "-n", "2", "--out", dir.string(), "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["graphs"] == 4);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".tg";
  CHECK(files == 4);
  CHECK(fs::exists(dir / "g2_0.tg"));

  auto batch = run({"analyze", "-f", dir.string(), "--json"});
  CHECK(batch.code == 0);
  auto j = json::parse(batch.out);
  CHECK(j["summary"]["graphs"] == 4);
  CHECK(j["summary"]["in_class_r"] == 4);
  fs::remove_all(dir);
}

TEST_CASE("batch with a broken file exits 2 but reports the rest") {
  auto r = run({"analyze", "-f", data("klein.tg"), data("broken.tg"), "--json"});
  CHECK(r.code == 2);
  auto j = json::parse(r.out);
  CHECK(j["reports"].size() == 2);
  CHECK(j["summary"]["failures"] == 1);
}

TEST_CASE("oracle and its cap") {
  auto r = run({"oracle", "-f", data("klein.tg"), "-w", "a b", "-r", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "a b\nb a^-1\n");
  auto j = json::parse(run({"oracle", "-f", data("z2.tg"), "-w", "a b", "--json"}).out);
  CHECK(j["size"] == 2);

  setenv("TRAAG_ORACLE_CAP", "1", 1);
  CHECK(run({"oracle", "-f", data("z2.tg"), "-w", "a b"}).code == 3);
  setenv("TRAAG_ORACLE_CAP", "zero", 1);
  CHECK(run({"oracle", "-f", data("z2.tg"), "-w", "a b"}).code == 1);
  unsetenv("TRAAG_ORACLE_CAP");
}

TEST_CASE("output is deterministic and the seed is accepted") {
  std::vector<std::string> args{"analyze", "-f", data("c4.tg"), "--json"};
  CHECK(run(args).out == run(args).out);
  auto seeded = run({"--seed", "7", "analyze", "-f", data("c4.tg"), "--json"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out == run(args).out);
  auto text = run({"analyze", "-f", data("c4.tg")});
  CHECK(text.out.find("chordless cycle") != std::string::npos);
}
