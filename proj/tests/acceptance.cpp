// Runs the verify suites behind each acceptance criterion and prints one line per criterion.
#include "kronsq/verify.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {
struct Criterion {
  int id;
  const char* suite;
  const char* title;
  double limit;  // seconds, 0 for none
};

const std::vector<Criterion> kCriteria = {
    {1, "evak", "k-polynomial regression", 10},
    {2, "evalr", "q-polynomial regression", 10},
    {3, "pd", "p_D regression and Delta_k law", 1},
    {4, "oracle", "g_square/g_general against character oracle", 300},
    {5, "table1", "s-polynomial table and staircase values", 120},
    {6, "kostka", "inverse Kostka times Kostka is identity, n <= 8", 60},
    {7, "sbst", "special border strip tableaux of (5,3,2)", 0},
    {8, "census", "diagram class census", 0},
    {9, "rectangles", "rectangle square and hook laws", 0},
    {10, "stability", "stability battery", 0},
    {11, "props", "property suites", 0},
};
}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    kronsq::verify::Report r = kronsq::verify::run_suite(c.suite);
    bool in_time = c.limit == 0 || r.seconds < c.limit;
    bool ok = r.passed() && in_time;
    if (!ok) ++failed;
    std::string limit = c.limit == 0 ? "" : " limit " + std::to_string(static_cast<int>(c.limit)) + "s";
    std::printf("criterion %d: %s  %s  [%zu/%zu items, %.2fs%s]\n", c.id, ok ? "PASS" : "FAIL", c.title,
                r.items.size() - r.failures(), r.items.size(), r.seconds, limit.c_str());
    if (!in_time) std::printf("  over time limit\n");
    for (const auto& it : r.items)
      if (!it.pass)
        std::printf("  %s: expected %s, got %s\n", it.name.c_str(), it.expected.c_str(), it.actual.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
