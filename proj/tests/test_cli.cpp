#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "chevwidth/constants_table.hpp"
#include "chevwidth/io.hpp"
#include "doctest.h"

using chevwidth::io::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& cwd = "") {
  std::string cmd = std::string(CHEVWIDTH_CLI) + " " + args + " 2>/dev/null";
  if (!cwd.empty()) cmd = "cd '" + cwd + "' && " + cmd;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const char* name) {
  const fs::path d = fs::temp_directory_path() / ("chevwidth-cli-" + std::string(name));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("roots info") {
  const Run r = run("roots info A3");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["roots"].size() == 12);
  CHECK(j["num_positive"] == 6);
  CHECK(j["weyl_order"] == 24);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("roots info").code == 1);
  CHECK(run("roots info Q9").code == 1);
  CHECK(run("--format xml roots info A2").code == 1);
  CHECK(run("verify commutator --system A2 --ring F6").code == 1);
  CHECK(run("--format csv k2 ring --ring F5[t]").code == 1);
}

TEST_CASE("identical runs give identical bytes") {
  for (const char* args : {"--seed 5 factor --ring F3[t] --system A2 --random 40",
                           "--seed 5 --format csv factor --ring F2[t,t^-1] --system A1 --random 40",
                           "--seed 11 verify commutator --system C2 --ring Z --trials 5",
                           "--seed 3 tavgen --target D4 --field 2 --subsystems A2,A2,A2 --walk 50",
                           "--seed 7 suite acceptance --criterion 5"}) {
    CAPTURE(args);
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
  CHECK(run("--seed 1 factor --ring F3[t] --system A2 --random 40").out !=
        run("--seed 2 factor --ring F3[t] --system A2 --random 40").out);
}

TEST_CASE("corrupted constants cache") {
  const fs::path dir = scratch("cache");
  const std::string base = "--cache-dir '" + dir.string() + "' verify commutator --system C2 --ring F5";
  REQUIRE(run(base).code == 0);
  const fs::path file = dir / "constants-C2.json";
  REQUIRE(fs::exists(file));
  json table = chevwidth::io::load_file(file.string());

  SUBCASE("hash mismatch forces a rebuild") {
    json bad = table;
    bad["entries"][0][5] = 2;
    write(file, bad.dump());
    CHECK(run(base).code == 0);
    CHECK(chevwidth::io::load_file(file.string()) == table);
  }
  SUBCASE("a consistent but wrong table is reported") {
    json bad = table;
    const int a = bad["entries"][0][0], b = bad["entries"][0][1];
    bad["entries"][0][5] = bad["entries"][0][5].get<int>() + 1;
    bad["hash"] = chevwidth::table_hash(bad["entries"]);
    write(file, bad.dump());
    const Run r = run(base);
    CHECK(r.code == 2);
    const json rep = json::parse(r.out);
    REQUIRE(!rep["failures"].empty());
    CHECK(rep["failures"][0]["pair"] == json::array({a, b}));
    CHECK(rep["failures"][0]["invariant"] == "commutator formula");
  }
}

TEST_CASE("config file mirrors flags and flags win") {
  const fs::path dir = scratch("config");
  write(dir / "chevwidth.toml", "# run settings\nseed = 42\nformat = \"json\"\n");
  CHECK(json::parse(run("verify commutator --system A2 --ring F3 --trials 1", dir.string()).out)["seed"] == 42);
  CHECK(json::parse(run("--seed 9 verify commutator --system A2 --ring F3 --trials 1", dir.string()).out)["seed"] == 9);
  write(dir / "chevwidth.toml", "colour = 3\n");
  CHECK(run("roots info A2", dir.string()).code == 1);
}

TEST_CASE("file-driven commands") {
  const fs::path dir = scratch("files");
  write(dir / "m.json", R"({"ring":"F3[t]","rows":[["t^2+1","t"],["t","1"]]})");
  const Run f = run("factor --ring F3[t] --system A1 --matrix '" + (dir / "m.json").string() + "' --out '" +
                    (dir / "fact.json").string() + "'");
  REQUIRE(f.code == 0);
  const json fact = chevwidth::io::load_file((dir / "fact.json").string());
  CHECK(fact["verified"] == true);
  CHECK(fact["width"].get<int>() > 0);
  write(dir / "bad.json", R"({"ring":"F3[t]","rows":[["t","t"],["t","1"]]})");
  CHECK(run("factor --ring F3[t] --system A1 --matrix '" + (dir / "bad.json").string() + "'").code == 1);

  write(dir / "w.json", R"([{"root":0,"param":1},{"root":1,"param":"4"},{"root":0,"param":1}])");
  const Run e = run("steinberg eval --system A1 --rep sl --ring F5 --file '" + (dir / "w.json").string() + "'");
  REQUIRE(e.code == 0);
  CHECK(json::parse(e.out)["matrix"]["rows"] == json::parse(R"([["0","1"],["4","0"]])"));

  const Run k = run("k2 class --ring \"F3(t)\" --f \"t^2+1\" --g t");
  REQUIRE(k.code == 0);
  CHECK(json::parse(k.out).size() == 1);
  const Run kr = run("k2 ring --ring \"F5[t,t^-1]\"");
  REQUIRE(kr.code == 0);
  CHECK(json::parse(kr.out)["order"] == 4);
}

TEST_CASE("tavgen command") {
  const Run r = run("tavgen --target A3 --field 2 --subsystems A2,A2 --N 4 --exhaustive");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["sweep"]["elements"] == 20160);
  CHECK(j["sweep"]["failures"] == 0);
  CHECK(run("tavgen --target A3 --field 2 --subsystems A2 --N 4").code == 1);
}

TEST_CASE("suite acceptance") {
  const Run r = run("suite acceptance --seed 7");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["criteria"].size() == 8);
  for (const auto& c : j["criteria"]) CHECK(c["passed"] == true);
}
