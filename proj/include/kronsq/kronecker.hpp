#pragma once

#include "kronsq/poly.hpp"
#include "kronsq/removable.hpp"
#include "kronsq/tableaux.hpp"

#include <map>
#include <string>
#include <vector>

namespace kronsq {

// Evaluates to lr(la, la; (n - |pibar|, pibar)) at x_C = r_la(C).
MultiPoly q_polynomial(const Composition& pibar);
// Evaluates to g(la, la, (n - d, nubar)) at x_C = r_la(C).
MultiPoly k_polynomial(const Partition& nubar);
MultiPoly k_tilde(const Partition& nubar);

// class key -> sum over T in SBST(nu_tilde) with e(T) = |D| of
// sign(T) * lr(D, D; tau_bar(T)), for all classes |D| <= |nubar|; zeros dropped.
const std::map<std::string, Integer>& class_coefficients(const Partition& nubar);
// sum_D class_coefficients(nubar)[D] * p_D
MultiPoly k_polynomial_by_classes(const Partition& nubar);

Integer g_square(const Partition& la, const Partition& nubar);
// g(la, la, (n - d, 1^d)) through self-conjugate LR pairings.
Integer g_square_column(const Partition& la, int d);

Integer pair_removable(const Partition& la, const Partition& mu, const DiagramClass& d, const DiagramClass& e);
Integer g_general(const Partition& la, const Partition& mu, const Partition& nubar);
Integer g_rt(const Partition& la, const Partition& mu, const Partition& nubar);
// g(la, mu, nu) for a full third partition nu, via g_general.
Integer kronecker_coefficient(const Partition& la, const Partition& mu, const Partition& nu);

// sum_{alpha, beta |- d} c^D_alpha c^D_beta g(alpha, beta, nubar), |D| = |nubar| = d.
Integer class_coefficient(const DiagramClass& d, const Partition& nubar);
// Coefficient of r_la(Delta_k) in the class expansion of g(la, la, (n-d, nubar)).
Integer delta_coefficient(const Partition& nubar, int k);

Integer rectangle_square(int a, int b, int d);
Integer rectangle_hook(int a, int b, int d);

struct StabilityRow {
  int k;
  Integer lhs;  // g(la^(i,k), mu^(i,k), nu^(1,ki))
  Integer rhs;  // g(la, mu, nu)
  bool equal;
};

struct StabilityReport {
  bool hypothesis_ok = false;
  std::string violation;
  std::vector<StabilityRow> rows;
  bool all_equal() const;
};

StabilityReport stability_check(const Partition& la, const Partition& mu, const Partition& nu, int i, int k_max);

}  // namespace kronsq
