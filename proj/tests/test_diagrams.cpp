#include "kronsq/diagram.hpp"

#include <doctest.h>

#include <set>

using namespace kronsq;

namespace {
DiagramClass C(const char* key) { return DiagramClass::parse(key); }
}  // namespace

TEST_CASE("make_skew and components") {
  SkewShape s = make_skew({3, 2, 1}, {1, 1});
  CHECK(s.size() == 4);
  CHECK(connected_components(s).size() == 2);
  CHECK(connected_components(make_skew({5, 3, 3, 2}, {4, 3, 1, 1})).size() == 2);
  CHECK(connected_components(make_skew({4, 3, 1}, {})).size() == 1);
  CHECK_THROWS_AS(make_skew({3, 2}, {3, 3}), std::invalid_argument);
  CHECK(make_skew({3, 1}, {3, 1}).size() == 0);
}

TEST_CASE("classify") {
  CHECK(classify(make_skew({3, 2, 1}, {1, 1})) == classify(make_skew({5, 3, 3, 2}, {4, 3, 1, 1})));
  CHECK(classify(make_skew({2, 2}, {2, 2})).empty());
  CHECK(classify(Partition{2, 1}).key() == "1:2;1:1");
  CHECK(classify(make_skew({2, 2}, {1})).key() == "2:2;1:2");
  CHECK(classify(make_skew({3, 3}, {2})).key() == "3:3;1:3");
  CHECK(classify(make_skew({2, 1}, {1})).key() == "1:1|1:1");
}

TEST_CASE("representative round trip") {
  for (int k = 0; k <= 5; ++k)
    for (const auto& d : enumerate_classes(k, false)) CHECK(classify(representative(d)) == d);
}

TEST_CASE("keys are validated") {
  CHECK_THROWS_AS(C("1:2;2:3"), std::invalid_argument);
  CHECK_THROWS_AS(C("3:3;1:1"), std::invalid_argument);
  CHECK_THROWS(C("x"));
  CHECK(C("") == DiagramClass());
}

TEST_CASE("principal border strip and young hull") {
  CHECK(principal_border_strip(C("1:2;1:2")) == C("2:2;1:2"));
  CHECK(principal_border_strip(C("2:2;1:2")) == C("2:2;1:2"));
  CHECK(young_hull(C("2:2;1:2")) == C("1:2;1:2"));
  CHECK(young_hull(C("1:3;1:1")) == C("1:3;1:1"));
  CHECK_THROWS_AS(principal_border_strip(C("1:1|1:1")), std::invalid_argument);
  for (int k = 1; k <= 6; ++k) {
    for (const auto& c : enumerate_classes(k, true)) {
      CHECK(is_border_strip(c) == (principal_border_strip(c) == c));
      if (is_border_strip(c)) CHECK(principal_border_strip(young_hull(c)) == c);
    }
  }
}

TEST_CASE("disjoint union") {
  SkewShape u = disjoint_union(make_skew({3, 2, 1}, {1, 1}), make_skew({4, 2}, {1}));
  CHECK(u.outer == Partition{7, 5, 3, 2, 1});
  CHECK(u.inner == Partition{4, 3, 1, 1});
  DiagramClass d = C("2:2;1:2"), e = C("1:3");
  CHECK(disjoint_union(d, DiagramClass()) == d);
  CHECK(disjoint_union(d, e) == disjoint_union(e, d));
  CHECK(disjoint_union(d, e).size() == 6);
  CHECK(classify(u) == disjoint_union(classify(make_skew({3, 2, 1}, {1, 1})), classify(make_skew({4, 2}, {1}))));
}

TEST_CASE("conjugate classes") {
  CHECK(conjugate_class(C("1:2")) == C("1:1;1:1"));
  CHECK(conjugate_class(delta_class(3)) == delta_class(3));
  CHECK(conjugate_class(C("1:2;1:1")) == C("1:2;1:1"));
  for (int a = 0; a <= 4; ++a)
    for (const auto& d : enumerate_classes(a, false)) {
      CHECK(conjugate_class(conjugate_class(d)) == d);
      for (int b = 0; a + b <= 4; ++b)
        for (const auto& e : enumerate_classes(b, false))
          CHECK(conjugate_class(disjoint_union(d, e)) == disjoint_union(conjugate_class(d), conjugate_class(e)));
    }
}

TEST_CASE("subclasses") {
  CHECK(is_subclass(C("1:2"), C("2:2;1:2")));
  CHECK_FALSE(is_subclass(C("1:2"), C("1:2;1:1")));
  CHECK(is_subclass(DiagramClass(), C("1:2;1:1")));
}

TEST_CASE("class census") {
  const std::vector<std::pair<std::size_t, std::size_t>> counts{{1, 0}, {1, 1}, {3, 2}, {7, 4}, {19, 9}};
  for (int k = 0; k <= 4; ++k) {
    CHECK(enumerate_classes(k, false).size() == counts[k].first);
    CHECK(enumerate_classes(k, true).size() == counts[k].second);
  }
}

TEST_CASE("census agrees with brute force over skew shapes") {
  // Every class of size k <= 4 occurs as lambda/alpha with |lambda| <= 14.
  for (int k = 1; k <= 4; ++k) {
    std::set<std::string> seen;
    for (int n = k; n <= 14; ++n)
      for (const auto& la : partitions_of(n))
        for (const auto& alpha : partitions_between(Partition{}, la, n - k)) seen.insert(classify(make_skew(la, alpha)).key());
    std::set<std::string> listed;
    for (const auto& d : enumerate_classes(k, false)) listed.insert(d.key());
    CHECK(seen == listed);
  }
}

TEST_CASE("sorted decomposition") {
  DiagramClass d = disjoint_union(disjoint_union(C("1:1"), C("1:1")), C("1:2"));
  auto dec = sorted_decomposition(d);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == std::make_pair(C("1:1"), 2));
  CHECK(dec[1] == std::make_pair(C("1:2"), 1));
  CHECK(sorted_decomposition(delta_class(4)) == std::vector<std::pair<DiagramClass, int>>{{C("1:1"), 4}});
  CHECK(sorted_decomposition(C("2:2;1:2")).size() == 1);
  CHECK_THROWS_AS(sorted_decomposition(DiagramClass()), std::invalid_argument);
}

TEST_CASE("removable corners") {
  CHECK(removable_corner_count(make_skew({4, 3, 2, 2}, {3, 3})) == 2);
  CHECK(removable_corner_count(classify(Partition{4, 3, 2, 2})) == 3);
  CHECK(removable_corner_count(delta_class(5)) == 5);
}

TEST_CASE("rotate_180") {
  CHECK(rotate_180({2, 1}) == make_skew({2, 2}, {1}));
  CHECK(rotate_180({4}) == make_skew({4}, {}));
  CHECK(rotate_180({1, 1}) == make_skew({1, 1}, {}));
}
