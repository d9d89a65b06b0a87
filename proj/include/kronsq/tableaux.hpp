#pragma once

#include "kronsq/character_vector.hpp"
#include "kronsq/diagram.hpp"

#include <map>
#include <vector>

namespace kronsq {

Integer kostka(const Partition& la, const Composition& mu);

// Special border strip tableau: a chain of partitions whose successive
// differences are border strips meeting column 1.
struct SBSTableau {
  Partition shape;
  std::vector<SkewShape> strips;  // innermost first
  int sign = 1;
  Partition gamma;                // strip sizes, decreasing
  Composition tau;                // strip through (1, shape_1) first, then the rest decreasing
  Composition tau_bar;            // tau without its first entry
  int e = 0;                      // |tau_bar|
};

const std::vector<SBSTableau>& enumerate_sbst(const Partition& nu);

// Sum of signs of SBST of shape mu and content lambda.
Integer inverse_kostka(const Partition& la, const Partition& mu);

// tau of the tableau of shape (n - d, nubar) matched with t, a tableau of shape nu_tilde(nubar).
Composition shifted_tau(const SBSTableau& t, const Partition& nubar, int n);

// chi^nu as a signed sum of permutation characters, read off the SBST of
// shape nu by content gamma(T) or by (sorted) tau(T).
std::map<Partition, Integer> phi_expansion_gamma(const Partition& nu);
std::map<Partition, Integer> phi_expansion_tau(const Partition& nu);

Integer lr_coefficient(const SkewShape& s, const Partition& mu);
Integer lr_coefficient(const DiagramClass& d, const Partition& mu);
// Number of LR multitableaux of shape s with the given content sequence.
Integer lr_multi_count(const SkewShape& s, const std::vector<Partition>& contents);

CharacterVector skew_character(const DiagramClass& d);
Integer f_count(const Partition& la);
Integer f_count(const DiagramClass& d);

Integer lr_skew_pair(const SkewShape& s, const SkewShape& t, const Composition& pi);
Integer lr_pair(const DiagramClass& d, const DiagramClass& e, const Composition& pi);
Integer lr_lambda_mu(const Partition& la, const Partition& mu, const Composition& pi);

}  // namespace kronsq
