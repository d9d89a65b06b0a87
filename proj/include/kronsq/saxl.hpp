#pragma once

#include "kronsq/diagram.hpp"
#include "kronsq/piecewise.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kronsq {

struct StaircaseData {
  int k = 0;
  Partition rho;    // (k, k-1, ..., 1)
  int n = 0;        // k(k+1)/2
  SkewShape zeta;   // principal border strip of rho
  DiagramClass z;   // its class
};

StaircaseData staircase(int k);

// m with B(c) = Z_m, if any.
std::optional<int> z_index(const DiagramClass& c);

PiecewisePoly f_D_ppf(const DiagramClass& d);
Integer staircase_removable(int k, const DiagramClass& d);

// s(k) = g(rho_k, rho_k, (n_k - d, nubar)) for k >= t(nubar).
PiecewisePoly s_polynomial(const Partition& nubar);

struct SaxlBounds {
  int t = 1;  // smallest k with k(k+1)/2 >= nu_2 + d
  int c = 1;  // max(d - 1, t)
};

SaxlBounds saxl_bounds(const Partition& nubar);
// The piece of s_nubar on [c(nubar), inf).
UniPoly main_piece(const Partition& nubar);

struct PositivityRow {
  int k;
  Integer value;
  bool positive;
};

struct PositivityReport {
  std::vector<PositivityRow> rows;
  int non_positive = 0;
  bool bound_holds = true;  // non_positive <= 2d - (1 + sqrt(1 + 8(nu_2 + d)))/2, or none at all
};

PositivityReport positivity_scan(const Partition& nubar, int k_max);

struct Xd1Report {
  bool hook = false;   // only hooks are asserted
  Rational actual;
  Rational predicted;  // -f^nubar (C(d,2) + 1)
  bool matches = false;
};

Xd1Report xd1_coefficient_check(const Partition& nubar);

}  // namespace kronsq
