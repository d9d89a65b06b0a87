#pragma once

#include "kronsq/character_vector.hpp"
#include "kronsq/diagram.hpp"

#include <map>
#include <vector>

// Brute-force character theory. Deliberately shares nothing with the
// Littlewood-Richardson code so the two can check each other.
namespace kronsq::oracle {

// Largest n for which character tables are built (default 15).
int max_degree();
void set_max_degree(int n);

// Murnaghan-Nakayama value chi^{outer/inner}(rho).
Integer mn_value(const SkewShape& s, const Partition& rho);
Integer mn_value(const Partition& la, const Partition& rho);

// n! / z_rho
Integer class_size(const Partition& rho);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> irreps;   // reverse-lex
  std::vector<Partition> classes;  // reverse-lex
  std::vector<Integer> class_sizes;
  std::vector<std::vector<Integer>> values;  // values[irrep][class]
  int index_of(const Partition& la) const;
};

const CharacterTable& character_table(int n);

Integer g_oracle(const Partition& la, const Partition& mu, const Partition& nu);

// Value of the permutation character phi^pi at a permutation of cycle type rho.
Integer perm_character_value(const Composition& pi, const Partition& rho);
CharacterVector perm_character(const Composition& pi);

// <chi^s (x) chi^t, phi^pi> from class sums.
Integer skew_pair_inner_product(const SkewShape& s, const SkewShape& t, const Composition& pi);

// chi^nu = sum_la coeff[la] * phi^la, via the inverse of the Kostka matrix
// obtained from permutation-character decompositions.
std::map<Partition, Integer> jacobi_trudi(const Partition& nu);

// Kostka number K_{la, mu} read from the decomposition of phi^mu.
Integer kostka(const Partition& la, const Partition& mu);

}  // namespace kronsq::oracle
