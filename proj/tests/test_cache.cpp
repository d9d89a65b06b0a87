#include "kronsq/cache.hpp"
#include "kronsq/kronecker.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace kronsq;
namespace fs = std::filesystem;

namespace {
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("kronsq_test_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  pclose(f);
  return out;
}
}  // namespace

TEST_CASE("cache round trip") {
  TempDir tmp;
  PolyCache cache(tmp.path, true);
  Json payload = poly_to_json(k_polynomial({2, 1}));
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return payload;
  };
  CHECK(cache.get_or_compute("kpoly", "2,1", compute) == payload);
  CHECK(cache.get_or_compute("kpoly", "2,1", compute) == payload);
  CHECK(calls == 1);
  fs::path file = cache.path_for("kpoly", "2,1");
  REQUIRE(fs::exists(file));
  std::string first = slurp(file);
  cache.store("kpoly", "2,1", payload);
  CHECK(slurp(file) == first);

  Json stale = Json::parse(first);
  stale["version"] = "kronsq-cache-0";
  std::ofstream(file) << stale.dump();
  CHECK_FALSE(cache.load("kpoly", "2,1").has_value());
  cache.get_or_compute("kpoly", "2,1", compute);
  CHECK(calls == 2);
  CHECK(slurp(file) == first);

  std::ofstream(file) << "not json";
  CHECK_FALSE(cache.load("kpoly", "2,1").has_value());

  PolyCache off(tmp.path / "off", false);
  off.get_or_compute("kpoly", "1", compute);
  off.get_or_compute("kpoly", "1", compute);
  CHECK(calls == 4);
  CHECK_FALSE(fs::exists(tmp.path / "off"));
}

TEST_CASE("cli output is deterministic and cache independent") {
  TempDir tmp;
  std::string env = "KRONSQ_CACHE_DIR=" + tmp.path.string() + " ";
  std::string bin = KRONSQ_CLI_PATH;
  for (const char* args : {" kpoly --nubar 2,1", " --json kpoly --nubar 2,1 --border-strips", " saxl --nubar 3,1",
                           " pd --class '2:2;1:2|1:1'"}) {
    std::string cold = run(env + bin + args + " 2>&1");
    std::string warm = run(env + bin + args + " 2>&1");
    std::string none = run(bin + " --no-cache" + args + " 2>&1");
    CHECK(!cold.empty());
    CHECK(cold == warm);
    CHECK(cold == none);
  }
  CHECK(run(env + bin + " gsquare --lambda 4,3,1 --nubar 1") == "2\n");
}
