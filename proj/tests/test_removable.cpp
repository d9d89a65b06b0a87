#include "kronsq/removable.hpp"

#include <doctest.h>

#include <random>

using namespace kronsq;

namespace {
DiagramClass C(const char* key) { return DiagramClass::parse(key); }
DiagramClass U(const DiagramClass& a, const DiagramClass& b) { return disjoint_union(a, b); }
}  // namespace

TEST_CASE("removable sets") {
  CHECK(removable_set({4, 3, 1}, square_class()).members.size() == 3);
  std::vector<Partition> s = removable_set({4, 3, 2, 1}, delta_class(2)).members;
  std::sort(s.begin(), s.end());
  std::vector<Partition> want{{3, 2, 2, 1}, {3, 3, 1, 1}, {3, 3, 2}, {4, 2, 1, 1}, {4, 2, 2}, {4, 3, 1}};
  std::sort(want.begin(), want.end());
  CHECK(s == want);
  RemovableSet e = removable_set({4, 3, 1}, DiagramClass());
  CHECK(e.members == std::vector<Partition>{{4, 3, 1}});
}

TEST_CASE("removable counts") {
  Partition la{4, 3, 1};
  CHECK(removable_count(la, U(C("1:1"), C("1:2"))) == 2);
  CHECK(removable_count(la, C("1:2;1:1")) == 1);
  CHECK(removable_count(la, U(C("1:1"), C("1:1;1:1"))) == 0);
  for (int n = 1; n <= 10; ++n)
    for (const auto& mu : partitions_of(n)) {
      Integer r = removable_count(mu, square_class());
      for (int k = 1; k <= 4; ++k) CHECK(removable_count(mu, delta_class(k)) == binomial(r, k));
    }
}

TEST_CASE("connected counts only see the principal border strip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(5, 14)(rng);
    const auto& ps = partitions_of(n);
    const Partition& la = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
    for (int k = 1; k <= 5; ++k)
      for (const auto& c : enumerate_classes(k, true)) {
        CHECK(removable_count(la, c) == removable_count(la, principal_border_strip(c)));
        CHECK(removable_count(la, conjugate_class(c)) == removable_count(conjugate(la), c));
      }
  }
}

TEST_CASE("collage counts") {
  CHECK(collage_count({delta_class(2), delta_class(2)}, delta_class(4)) == 6);
  CHECK(collage_count({C("1:1"), C("1:1")}, delta_class(2)) == 2);
  CHECK(collage_count({C("1:2"), C("1:1")}, U(C("1:2"), C("1:1"))) == 1);
  DiagramClass d = U(U(C("1:2"), C("1:2")), U(C("2:2;1:2"), C("1:1")));
  CHECK(collage_count({C("1:2"), C("1:2"), C("2:2;1:2"), C("1:1")}, d) == 2);
}

TEST_CASE("product law") {
  for (const auto& la : std::vector<Partition>{{4, 3, 1}, {5, 3, 3, 1}, {6, 4, 2, 1}, {3, 3, 2, 2}, {7, 5, 2}}) {
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (const auto& d1 : enumerate_classes(a, false))
          for (const auto& d2 : enumerate_classes(b, false)) {
            Integer rhs = 0;
            for (int k = std::max(a, b); k <= a + b; ++k)
              for (const auto& e : enumerate_classes(k, false)) {
                Integer c = collage_count({d1, d2}, e);
                if (c != 0) rhs += c * removable_count(la, e);
              }
            CHECK(removable_count(la, d1) * removable_count(la, d2) == rhs);
          }
  }
}

TEST_CASE("p polynomials") {
  MultiPoly r = class_monomial(square_class()), hh = class_monomial(C("1:2")), vv = class_monomial(C("1:1;1:1"));
  MultiPoly gam = class_monomial(C("2:2;1:2"));
  CHECK(p_polynomial(DiagramClass()) == MultiPoly::constant(1));
  CHECK(p_polynomial(C("1:2")) == hh);
  CHECK(p_polynomial(U(C("1:1"), C("1:2"))) == (r - MultiPoly::constant(1)) * hh);
  CHECK(p_polynomial(U(C("1:2"), C("1:2"))) == binomial_poly(hh, 0, 2));
  CHECK(p_polynomial(U(C("1:2"), C("1:1;1:1"))) == hh * vv - gam);
  for (int k = 2; k <= 5; ++k)
    for (const auto& d : enumerate_classes(k, false)) {
      if (d.connected()) continue;
      for (const auto& v : p_polynomial(d).variables()) CHECK(v.weight < k);
    }
}

TEST_CASE("border strip substitution") {
  CHECK(p_tilde(C("1:2;1:2")) == class_monomial(C("2:2;1:2")));
  CHECK(p_tilde(C("2:3;1:2")) == class_monomial(principal_border_strip(C("2:3;1:2"))));
  for (int n = 4; n <= 10; ++n)
    for (const auto& la : partitions_of(n)) {
      auto values = removable_assignment(la, 4);
      for (int k = 1; k <= 4; ++k)
        for (const auto& d : enumerate_classes(k, false))
          CHECK(evaluate(p_tilde(d), values) == evaluate(p_polynomial(d), values));
    }
}

TEST_CASE("master identity") {
  for (int n = 4; n <= 11; ++n)
    for (const auto& la : partitions_of(n)) {
      auto values = removable_assignment(la, 4);
      for (int k = 1; k <= 4; ++k)
        for (const auto& d : enumerate_classes(k, false))
          CHECK(evaluate(p_polynomial(d), values) == Rational(removable_count(la, d)));
    }
}

TEST_CASE("census") {
  const auto& census = removable_census({4, 3, 1}, 2);
  CHECK(census.at("1:1") == 3);
  CHECK(census.at("1:2") == 1);
  CHECK(census.at("1:1|1:1") == 3);
  CHECK(census.count("1:1;1:1|1:1") == 0);
}
