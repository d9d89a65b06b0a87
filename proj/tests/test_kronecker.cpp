#include "kronsq/kronecker.hpp"
#include "kronsq/oracle.hpp"
#include "kronsq/removable.hpp"
#include "kronsq/tableaux.hpp"

#include <doctest.h>

using namespace kronsq;

namespace {
DiagramClass C(const char* key) { return DiagramClass::parse(key); }
MultiPoly X(const char* key) { return class_monomial(C(key)); }
MultiPoly K(long c) { return MultiPoly::constant(c); }
}  // namespace

TEST_CASE("small q and k polynomials") {
  MultiPoly r = X("1:1"), h2 = X("1:2") + X("1:1;1:1");
  CHECK(q_polynomial({}) == K(1));
  CHECK(q_polynomial({1}) == r);
  CHECK(q_polynomial({2}) == h2 + K(2) * binomial_poly(r, 0, 2));
  CHECK(q_polynomial({1, 1}) == h2 + K(4) * binomial_poly(r, 0, 2));
  CHECK(k_polynomial({1}) == r - K(1));
  CHECK(k_polynomial({1, 1}) == pow(r - K(1), 2));
  CHECK(k_polynomial({2}) == h2 + K(2) * binomial_poly(r, 0, 2) - r);
  CHECK(k_tilde({1}) == r - K(1));
  CHECK(k_tilde({2}).variables().size() == 3);
  bool has_block = false, has_gamma = false;
  for (const auto& v : k_tilde({1, 1, 1, 1}).variables()) {
    has_block = has_block || v.key == "1:2;1:2";
    has_gamma = has_gamma || v.key == "2:2;1:2";
  }
  CHECK_FALSE(has_block);
  CHECK(has_gamma);
}

TEST_CASE("k from classes matches k from q") {
  for (int d = 0; d <= 4; ++d)
    for (const auto& nubar : partitions_of(d)) CHECK(k_polynomial_by_classes(nubar) == k_polynomial(nubar));
}

TEST_CASE("g_square") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& la : partitions_of(n)) CHECK(g_square(la, {}) == 1);
  CHECK(g_square({4, 3, 1}, {1}) == 2);
  CHECK(g_square({3, 2, 1}, {2, 1}) == oracle::g_oracle({3, 2, 1}, {3, 2, 1}, {3, 2, 1}));
  CHECK_THROWS_AS(g_square({2, 1}, {2, 1}), std::invalid_argument);
  for (int n = 2; n <= 9; ++n)
    for (const auto& la : partitions_of(n))
      for (int d = 1; d <= 3 && 2 * d <= n; ++d) {
        Partition col(std::vector<int>(d, 1));
        if (n >= d + 1) CHECK(g_square_column(la, d) == g_square(la, col));
      }
}

TEST_CASE("polynomial evaluation matches direct evaluation") {
  for (int n = 6; n <= 9; ++n)
    for (const auto& la : partitions_of(n)) {
      auto values = removable_assignment(la, 4);
      for (int d = 0; d <= 4; ++d)
        for (const auto& nubar : partitions_of(d)) {
          if (n < d + nubar.first()) continue;
          Rational g(g_square(la, nubar));
          CHECK(evaluate(k_polynomial(nubar), values) == g);
          CHECK(evaluate(k_tilde(nubar), values) == g);
        }
    }
}

TEST_CASE("pair removable counts") {
  CHECK(pair_removable({2, 1}, {3}, square_class(), square_class()) == 1);
  for (const auto& la : partitions_of(6))
    for (const auto& d : enumerate_classes(2, false))
      for (const auto& e : enumerate_classes(2, false))
        CHECK(pair_removable(la, la, d, e) == (d == e ? removable_count(la, d) : Integer(0)));
  CHECK_THROWS_AS(pair_removable({2, 1}, {3}, square_class(), C("1:2")), std::invalid_argument);
}

TEST_CASE("g_general and g_rt") {
  for (const auto& mu : partitions_of(6))
    for (const auto& nu : partitions_of(6)) CHECK(g_general({6}, mu, tail(nu)) == (mu == nu ? 1 : 0));
  CHECK(g_general({3, 1}, {2, 2}, {1, 1}) == 1);
  CHECK(g_rt({2, 1}, {2, 1}, {}) == 1);
  CHECK(g_rt({2, 2}, {2, 2}, {2}) == 1);
  for (const auto& la : partitions_of(8))
    for (int d = 0; d <= 3; ++d)
      for (const auto& nubar : partitions_of(d)) {
        if (8 < d + nubar.first()) continue;
        Integer g = g_square(la, nubar);
        CHECK(g_general(la, la, nubar) == g);
        CHECK(g_rt(la, la, nubar) == g);
      }
}

TEST_CASE("kronecker coefficients against the oracle") {
  for (int n = 1; n <= 7; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& la : ps)
      for (const auto& mu : ps)
        for (const auto& nu : ps) CHECK(kronecker_coefficient(la, mu, nu) == oracle::g_oracle(la, mu, nu));
  }
}

TEST_CASE("class and delta coefficients") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& nubar : partitions_of(d)) {
      const auto& coeffs = class_coefficients(nubar);
      for (const auto& cls : enumerate_classes(d, false)) {
        auto it = coeffs.find(cls.key());
        Integer c = it == coeffs.end() ? Integer(0) : it->second;
        CHECK(class_coefficient(cls, nubar) == c);
      }
      for (const auto& mu : partitions_of(d))
        CHECK(class_coefficient(classify(mu), nubar) == oracle::g_oracle(mu, mu, nubar));
      CHECK(class_coefficient(delta_class(d), nubar) == f_count(nubar) * factorial(d));
      CHECK(delta_coefficient(nubar, d) == f_count(nubar) * factorial(d));
      for (int k = 1; k <= d; ++k) {
        auto it = coeffs.find(delta_class(k).key());
        CHECK(delta_coefficient(nubar, k) == (it == coeffs.end() ? Integer(0) : it->second));
        int m = nubar.first();
        bool hook = nubar.length() == d - m + 1;
        if (hook && k < d) CHECK(delta_coefficient(nubar, k) == ((d - k) % 2 ? -1 : 1) * factorial(k) * binomial(k, m - 1));
      }
    }
  CHECK(delta_coefficient({2, 1}, 2) == -4);
  CHECK(class_coefficient(C("2:2;1:2"), {2, 1}) == 1);
  CHECK_THROWS_AS(delta_coefficient({2, 1}, 4), std::invalid_argument);
}

TEST_CASE("rectangles") {
  CHECK(rectangle_square(2, 2, 2) == 1);
  CHECK(rectangle_square(3, 3, 0) == 1);
  CHECK(rectangle_square(4, 1, 2) == 0);
  CHECK(rectangle_hook(2, 2, 2) == 0);
  CHECK(rectangle_hook(3, 3, 0) == 1);
  CHECK(rectangle_hook(3, 3, 2) == oracle::g_oracle({3, 3, 3}, {3, 3, 3}, {7, 1, 1}));
  CHECK_THROWS_AS(rectangle_square(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(rectangle_hook(2, 1, 2), std::invalid_argument);
}

TEST_CASE("stability") {
  StabilityReport r = stability_check({3, 3}, {3, 3}, {4, 2}, 2, 1);
  REQUIRE(r.hypothesis_ok);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].lhs == 1);
  CHECK(r.rows[0].rhs == 1);
  CHECK(r.all_equal());
  CHECK(stability_check({3, 3}, {3, 3}, {4, 2}, 2, 0).all_equal());
  StabilityReport bad = stability_check({3, 3}, {4, 2}, {4, 2}, 1, 2);
  CHECK_FALSE(bad.hypothesis_ok);
  CHECK_FALSE(bad.violation.empty());
  StabilityReport murnaghan = stability_check({2, 1}, {2, 1}, {2, 1}, 1, 3);
  CHECK(murnaghan.all_equal());
}

TEST_CASE("conjugation symmetry") {
  for (int n = 1; n <= 9; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& la : ps)
      for (int d = 0; d <= 2; ++d)
        for (const auto& nubar : partitions_of(d))
          if (n >= d + nubar.first())
            for (const auto& mu : ps)
              CHECK(g_general(conjugate(la), conjugate(mu), nubar) == g_general(la, mu, nubar));
  }
}
