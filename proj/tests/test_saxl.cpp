#include "kronsq/kronecker.hpp"
#include "kronsq/oracle.hpp"
#include "kronsq/removable.hpp"
#include "kronsq/saxl.hpp"
#include "kronsq/tableaux.hpp"

#include <doctest.h>

using namespace kronsq;

namespace {
DiagramClass C(const char* key) { return DiagramClass::parse(key); }
}  // namespace

TEST_CASE("staircases") {
  StaircaseData s4 = staircase(4);
  CHECK(s4.rho == Partition{4, 3, 2, 1});
  CHECK(s4.n == 10);
  CHECK(s4.zeta.size() == 7);
  CHECK(staircase(1).z == square_class());
  for (int k = 1; k <= 7; ++k) {
    CHECK(is_border_strip(staircase(k).z));
    CHECK(staircase(k).z.size() == 2 * k - 1);
  }
  CHECK_THROWS_AS(staircase(0), std::invalid_argument);
}

TEST_CASE("z index") {
  CHECK(z_index(square_class()) == 1);
  CHECK_FALSE(z_index(C("1:2")).has_value());
  CHECK(z_index(C("1:2;1:1")) == 2);
  CHECK_FALSE(z_index(C("2:2;1:2")).has_value());
}

TEST_CASE("f_D") {
  for (int m = 1; m <= 5; ++m) {
    PiecewisePoly f = f_D_ppf(staircase(m).z);
    for (int k = m - 1; k <= 9; ++k) CHECK(f(Rational(k)) == k - m + 1);
  }
  for (int d = 1; d <= 4; ++d) {
    PiecewisePoly f = f_D_ppf(delta_class(d));
    for (int k = 0; k <= 9; ++k) CHECK(f(Rational(k)) == Rational(k >= d - 1 ? binomial(k, d) : Integer(0)));
  }
  CHECK(f_D_ppf(C("1:2")) == PiecewisePoly());
  for (int k = 1; k <= 4; ++k)
    for (const auto& d : enumerate_classes(k, false))
      for (int j = 1; j <= 8; ++j) CHECK(f_D_ppf(d)(Rational(j)) == Rational(removable_count(staircase(j).rho, d)));
}

TEST_CASE("staircase removable") {
  CHECK(staircase_removable(3, delta_class(2)) == 3);
  CHECK(staircase_removable(2, staircase(3).z) == 0);
  CHECK(staircase_removable(4, staircase(2).z) == 3);
  for (int k = 1; k <= 4; ++k)
    for (const auto& d : enumerate_classes(k, false))
      for (int j = 1; j <= 8; ++j) CHECK(staircase_removable(j, d) == removable_count(staircase(j).rho, d));
}

TEST_CASE("bounds") {
  CHECK(saxl_bounds({1}).t == 2);
  CHECK(saxl_bounds({2}).t == 3);
  CHECK(saxl_bounds({1, 1, 1, 1, 1}).t == 3);
  CHECK(saxl_bounds({1, 1, 1, 1, 1}).c == 4);
}

TEST_CASE("s polynomials") {
  UniPoly x = UniPoly::x();
  CHECK(main_piece({1}) == x - UniPoly::constant(1));
  CHECK(main_piece({2, 1}) == UniPoly({-1, 8, -8, 2}));
  PiecewisePoly s = s_polynomial({1, 1, 1, 1, 1});
  CHECK(s.piece_on(4) == UniPoly({-56, 124, -110, 49, -11, 1}));
  CHECK(s.piece_on(4) - s.piece_on(3) == UniPoly::binomial(5, 0) * Rational(120));
  for (int d = 0; d <= 5; ++d)
    for (const auto& nubar : partitions_of(d)) {
      PiecewisePoly sp = s_polynomial(nubar);
      CHECK(sp.is_continuous());
      UniPoly main = main_piece(nubar);
      CHECK(main.degree() == d);
      CHECK(main.leading() == Rational(f_count(nubar)));
      SaxlBounds b = saxl_bounds(nubar);
      for (int k = b.t; k <= 8; ++k) {
        Integer g = g_square(staircase(k).rho, nubar);
        CHECK(sp(Rational(k)) == Rational(g));
        if (staircase(k).n <= 15) CHECK(g == oracle::g_oracle(staircase(k).rho, staircase(k).rho, extend_nubar(nubar, staircase(k).n)));
      }
      // every real root of the main piece lies below t
      if (d >= 1)
        for (const auto& r : real_roots(main, Rational(1, 1000))) CHECK(r.hi < b.t);
    }
}

TEST_CASE("positivity scan") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& nubar : partitions_of(d)) {
      PositivityReport r = positivity_scan(nubar, 10);
      CHECK(r.non_positive == 0);
      CHECK(r.bound_holds);
    }
  PositivityReport one = positivity_scan({1}, 4);
  REQUIRE(one.rows.size() == 3);
  CHECK(one.rows[0].value == 1);
}

TEST_CASE("x^(d-1) coefficient") {
  Xd1Report two = xd1_coefficient_check({2});
  CHECK(two.hook);
  CHECK(two.matches);
  CHECK(two.actual == -2);
  CHECK(xd1_coefficient_check({2, 1}).actual == -8);
  for (int d = 1; d <= 5; ++d)
    for (const auto& nubar : partitions_of(d)) {
      Xd1Report r = xd1_coefficient_check(nubar);
      if (r.hook) CHECK(r.matches);
    }
  Xd1Report open = xd1_coefficient_check({3, 2});
  CHECK_FALSE(open.hook);
  CHECK(open.actual == -55);
  CHECK(open.predicted == -55);
}
