#pragma once

#include "kronsq/poly.hpp"
#include "kronsq/partition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kronsq::verify {

struct Item {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  std::vector<Item> items;
  double seconds = 0;
  bool passed() const;
  int failures() const;
};

// evak, evalr, pd, oracle, table1, kostka, sbst, census, rectangles, stability, props
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name);

// Published polynomials, written in class-keyed variables.
std::vector<std::pair<Partition, MultiPoly>> k_fixtures();
std::vector<std::pair<Partition, MultiPoly>> q_fixtures();
std::vector<std::pair<std::string, MultiPoly>> p_fixtures();

struct Table1Row {
  Partition nubar;
  std::vector<long> coeffs;  // highest degree first, as printed
  std::vector<std::string> roots;
  int t;
  std::vector<int> derived;  // coefficient positions (from the top) checked against a fit instead
};

const std::vector<Table1Row>& table1();

// Degree-d polynomial through the points (k, g_square(rho_k, nubar)), k = k0..k0+d.
UniPoly fit_from_staircases(const Partition& nubar, int k0);

}  // namespace kronsq::verify
