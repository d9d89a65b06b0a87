#include "kronsq/diagram.hpp"
#include "kronsq/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kronsq;
using namespace kronsq::oracle;

TEST_CASE("character values") {
  for (const auto& rho : partitions_of(5)) {
    CHECK(mn_value(Partition{5}, rho) == 1);
    int sign = (5 - rho.length()) % 2 ? -1 : 1;
    CHECK(mn_value(Partition{1, 1, 1, 1, 1}, rho) == sign);
  }
  CHECK(mn_value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(mn_value(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_value(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK_THROWS_AS(mn_value(Partition{2, 1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("orthogonality") {
  for (int n = 1; n <= 12; ++n) {
    const CharacterTable& t = character_table(n);
    std::size_t m = t.irreps.size();
    Integer total = 0;
    for (const auto& c : t.class_sizes) total += c;
    CHECK(total == factorial(n));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        Integer s = 0;
        for (std::size_t c = 0; c < m; ++c) s += t.class_sizes[c] * t.values[i][c] * t.values[j][c];
        CHECK(s == (i == j ? factorial(n) : Integer(0)));
      }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        Integer s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t.values[i][a] * t.values[i][b];
        CHECK(s * t.class_sizes[a] == (a == b ? factorial(n) : Integer(0)));
      }
  }
}

TEST_CASE("kronecker symmetries") {
  CHECK(g_oracle({2, 1}, {2, 1}, {2, 1}) == 1);
  CHECK(g_oracle({2, 2}, {2, 2}, {2, 1, 1}) == 0);
  for (int n = 1; n <= 9; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& mu : ps)
      for (const auto& nu : ps) CHECK(g_oracle({n}, mu, nu) == (mu == nu ? 1 : 0));
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const auto& ps = partitions_of(n);
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    Partition a = ps[pick(rng)], b = ps[pick(rng)], c = ps[pick(rng)];
    Integer g = g_oracle(a, b, c);
    CHECK(g >= 0);
    CHECK(g_oracle(a, c, b) == g);
    CHECK(g_oracle(b, a, c) == g);
    CHECK(g_oracle(b, c, a) == g);
    CHECK(g_oracle(c, a, b) == g);
    CHECK(g_oracle(c, b, a) == g);
    CHECK(g_oracle(conjugate(a), conjugate(b), c) == g);
  }
  CHECK_THROWS_AS(g_oracle({2}, {2}, {3}), std::invalid_argument);
}

TEST_CASE("permutation characters") {
  CharacterVector trivial(5);
  trivial.add({5}, 1);
  CHECK(perm_character({5}) == trivial);
  for (const auto& pi : compositions_of(5)) {
    Integer dim = 0;
    CharacterVector phi = perm_character(pi);
    for (const auto& [la, m] : phi.terms()) dim += m * mn_value(la, Partition(std::vector<int>(5, 1)));
    CHECK(dim == multinomial(pi));
    CHECK(perm_character_value(pi, {1, 1, 1, 1, 1}) == multinomial(pi));
    CHECK(phi == perm_character(sorted_partition(pi).parts()));
    for (const auto& la : partitions_of(5)) CHECK(phi[la] == oracle::kostka(la, sorted_partition(pi)));
  }
}

TEST_CASE("pairing") {
  CharacterVector a(4), b(4), zero(4);
  a.add({3, 1}, 1);
  b.add({2, 2}, 1);
  CHECK(pairing(a, a) == 1);
  CHECK(pairing(a, b) == 0);
  CHECK(pairing(a, zero) == 0);
  CHECK_THROWS_AS(pairing(a, CharacterVector(5)), std::invalid_argument);
}

TEST_CASE("jacobi trudi") {
  std::map<Partition, Integer> col{{{3}, 1}, {{2, 1}, -2}, {{1, 1, 1}, 1}};
  CHECK(jacobi_trudi({1, 1, 1}) == col);
  std::map<Partition, Integer> hook{{{4}, 1}, {{2, 2}, -1}, {{3, 1}, -1}, {{2, 1, 1}, 1}};
  CHECK(jacobi_trudi({2, 1, 1}) == hook);
  std::map<Partition, Integer> row{{{6}, 1}};
  CHECK(jacobi_trudi({6}) == row);
}

TEST_CASE("monotone pairing with permutation characters") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const auto& ps = partitions_of(n);
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    const CharacterTable& t = character_table(n);
    Partition a = ps[pick(rng)], b = ps[pick(rng)];
    // chi = chi^a (x) chi^b, paired with phi^la through class sums
    std::vector<Integer> pair(ps.size());
    for (std::size_t l = 0; l < ps.size(); ++l) {
      Integer s = 0;
      for (std::size_t c = 0; c < ps.size(); ++c)
        s += t.class_sizes[c] * t.values[t.index_of(a)][c] * t.values[t.index_of(b)][c] *
             perm_character_value(ps[l].parts(), t.classes[c]);
      pair[l] = s / factorial(n);
    }
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (dominates(ps[j], ps[i])) CHECK(pair[i] >= pair[j]);
  }
}

TEST_CASE("isomorphic skew shapes share characters") {
  // Every class of size <= 5 realized as two different concrete shapes.
  for (int k = 1; k <= 5; ++k)
    for (const auto& d : enumerate_classes(k, false)) {
      SkewShape a = representative(d);
      std::vector<int> outer = a.outer.parts(), inner = a.inner.parts();
      // shift the whole shape down one row and right one column
      outer.insert(outer.begin(), a.outer.first() + 1);
      for (auto& p : outer) if (&p != &outer.front()) ++p;
      inner.insert(inner.begin(), a.outer.first() + 1);
      for (std::size_t i = 1; i < inner.size(); ++i) ++inner[i];
      while (inner.size() < outer.size()) inner.push_back(1);
      SkewShape b{Partition(outer), Partition(inner)};
      REQUIRE(classify(b) == d);
      for (const auto& rho : partitions_of(k)) CHECK(mn_value(a, rho) == mn_value(b, rho));
    }
}
