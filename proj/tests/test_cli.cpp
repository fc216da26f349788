#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("pgtool_test_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

const fs::path &workdir() {
  static const TempDir dir;
  return dir.path;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string &args) {
  const auto out = workdir() / "stdout.txt";
  const std::string cmd = std::string(PGTOOL_PATH) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::string path(const std::string &name) { return (workdir() / name).string(); }

json results(const Run &r) { return json::parse(r.out).at("results"); }

} // namespace

TEST_CASE("build then verify round trips") {
  for (std::string geo : {"vls", "new"}) {
    const auto b = run("build --geometry " + geo + " --out " + path(geo + ".pg"));
    REQUIRE(b.code == 0);
    CHECK(slurp(path(geo + ".pg")).rfind("pg 81 81\n", 0) == 0);
    const auto v = run("verify " + path(geo + ".pg") + " --expect 5,5,2");
    CHECK(v.code == 0);
    const auto r = results(v);
    CHECK(r["pass"] == true);
    CHECK(r["point_graph"]["lambda"] == 9);
    CHECK(r["pg"]["params"]["alpha"] == 2);
  }
  CHECK(run("verify " + path("vls.pg") + " --expect 5,5,3").code == 1);
}

TEST_CASE("usage and I/O errors exit 2") {
  CHECK(run("build --geometry bogus --out " + path("x.pg")).code == 2);
  CHECK(run("verify " + path("missing.pg")).code == 2);
  CHECK(run("build --geometry vls --out /nonexistent-dir/x.pg").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("verify " + path("vls.pg") + " --expect 5,5").code == 2);
  std::ofstream(path("garbage.pg")) << "pg 3 1\n2 1\n";
  CHECK(run("verify " + path("garbage.pg")).code == 2);
}

TEST_CASE("corrupted geometry fails with a witness") {
  auto text = slurp(path("vls.pg"));
  // Replace the first block with another valid-looking block.
  const auto second = text.find('\n') + 1;
  const auto end = text.find('\n', second);
  text.replace(second, end - second, "0 1 2 3 4 5");
  std::ofstream(path("bad.pg")) << text;
  const auto v = run("verify " + path("bad.pg"));
  CHECK(v.code == 1);
  CHECK(results(v)["pg"]["ok"] == false);
  CHECK(results(v)["pg"].contains("failure"));
}

TEST_CASE("inspection commands") {
  const auto srg = results(run("srg " + path("new.pg") + " --graph line"));
  CHECK(srg["v"] == 81);
  CHECK(srg["mu"] == 12);

  const auto local = results(run("local " + path("new.pg") + " --x 0 --y 1"));
  CHECK(local["edge_count"] == 9);
  CHECK(local["z"] == 2);

  const auto cl = results(run("cliques " + path("vls.pg") + " --graph line --list"));
  CHECK(cl["histogram"]["6"] == 162);
  CHECK(cl["stars"] == 81);
  CHECK(cl["non_stars"] == 81);
  CHECK(cl["cliques"].size() == 162 + cl["histogram"]["3"].get<int>());

  const auto aut = results(run("aut " + path("new.pg")));
  CHECK(aut["order"] == 972);
  CHECK(aut["point_orbit_sizes"] == json::array({27, 54}));
  CHECK(results(run("aut " + path("vls.pg") + " --graph point"))["order"] == 116640);

  const auto iso = results(run("iso " + path("vls.pg") + " " + path("new.pg")));
  CHECK(iso["isomorphic"] == false);

  const auto dual = run("dual " + path("new.pg") + " --out " + path("dual.pg"));
  CHECK(dual.code == 0);
  CHECK(results(dual)["self_dual"] == true);
  CHECK(run("verify " + path("dual.pg") + " --expect 5,5,2").code == 0);

  const auto cover = results(run("cover " + path("vls.pg")));
  CHECK(cover["solutions"] == 2);
  CHECK(cover["isomorphism_classes"] == 1);

  const auto mms = results(run("mms " + path("new.pg")));
  CHECK(mms["star_weighting_counts"] == json::array({6}));
  REQUIRE(mms["witness"].is_object());
  CHECK(mms["witness"]["nonnegative_count"].get<int>() <= 6);
  CHECK(mms["witness"]["is_star"] == false);
}

TEST_CASE("output is deterministic, key-sorted and newline-terminated") {
  for (std::string args : {"aut " + path("new.pg"), "mms " + path("vls.pg"), "cover " + path("new.pg") + " --list"}) {
    const auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    REQUIRE_FALSE(a.out.empty());
    CHECK(a.out.back() == '\n');
    CHECK_FALSE(json::parse(a.out).contains("elapsed_ms"));
    const auto keys = json::parse(a.out);
    std::vector<std::string> names;
    for (auto it = keys.begin(); it != keys.end(); ++it) names.push_back(it.key());
    CHECK(names == std::vector<std::string>{"command", "inputs", "results", "version"});
  }
  CHECK(json::parse(run("--timing aut " + path("new.pg")).out).contains("elapsed_ms"));
}

TEST_CASE("report writes one file per claim") {
  const auto r = run("report --all --out " + path("report"));
  CHECK(r.code == 0);
  CHECK(results(r)["all_pass"] == true);
  for (int i = 1; i <= 11; ++i) {
    const auto f = workdir() / "report" / ("C" + std::to_string(i) + ".json");
    REQUIRE(fs::exists(f));
    CHECK(json::parse(slurp(f))["status"] == "pass");
  }
  const auto table = slurp(workdir() / "report" / "summary.txt");
  CHECK(std::count(table.begin(), table.end(), '\n') == 11);
  const auto first = slurp(workdir() / "report" / "C4.json");
  REQUIRE(run("report --all --out " + path("report")).code == 0);
  CHECK(slurp(workdir() / "report" / "C4.json") == first);
}
