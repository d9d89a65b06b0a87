#include "kronsq/kronecker.hpp"

#include "kronsq/memo.hpp"

#include <memory>
#include <stdexcept>

namespace kronsq {

namespace {

ConcurrentMemo<Composition, MultiPoly> q_memo;
ConcurrentMemo<Partition, MultiPoly> k_memo;
using CoeffTable = std::shared_ptr<const std::map<std::string, Integer>>;
ConcurrentMemo<Partition, CoeffTable> coeff_memo;
using PairCensus = std::shared_ptr<const std::map<std::pair<std::string, std::string>, Integer>>;
ConcurrentMemo<std::tuple<Partition, Partition, int>, PairCensus> pair_census_memo;

void require_threshold(int n, const Partition& nubar) {
  if (n < nubar.size() + nubar.first())
    throw std::invalid_argument("(n - d, nubar) is not a partition: n=" + std::to_string(n) +
                                " < d + nu_2=" + std::to_string(nubar.size() + nubar.first()));
}

const std::map<std::pair<std::string, std::string>, Integer>& pair_census(const Partition& la, const Partition& mu,
                                                                            int max_size) {
  auto census = pair_census_memo.get_or_compute({la, mu, max_size}, [&] {
    auto out = std::make_shared<std::map<std::pair<std::string, std::string>, Integer>>();
    Partition common = intersection(la, mu);
    int n = la.size();
    for (int k = 0; k <= std::min(max_size, n); ++k)
      for (const auto& alpha : partitions_between(Partition{}, common, n - k))
        ++(*out)[{classify(SkewShape{la, alpha}).key(), classify(SkewShape{mu, alpha}).key()}];
    return PairCensus(std::move(out));
  });
  return *census;
}

}  // namespace

MultiPoly q_polynomial(const Composition& pibar) {
  return q_memo.get_or_compute(pibar, [&] {
    MultiPoly q;
    for (const auto& d : enumerate_classes(composition_size(pibar), false)) {
      Integer c = lr_pair(d, d, pibar);
      if (c != 0) q += p_polynomial(d) * Rational(c);
    }
    return q;
  });
}

MultiPoly k_polynomial(const Partition& nubar) {
  return k_memo.get_or_compute(nubar, [&] {
    MultiPoly k;
    for (const auto& t : enumerate_sbst(nu_tilde(nubar))) {
      Composition key = sorted_partition(t.tau_bar).parts();  // lr is invariant under reordering
      k += q_polynomial(key) * Rational(t.sign);
    }
    return k;
  });
}

MultiPoly k_tilde(const Partition& nubar) { return to_border_strips(k_polynomial(nubar)); }

const std::map<std::string, Integer>& class_coefficients(const Partition& nubar) {
  auto table = coeff_memo.get_or_compute(nubar, [&] {
    auto out = std::make_shared<std::map<std::string, Integer>>();
    const auto& tableaux = enumerate_sbst(nu_tilde(nubar));
    for (int k = 0; k <= nubar.size(); ++k) {
      for (const auto& d : enumerate_classes(k, false)) {
        Integer c = 0;
        for (const auto& t : tableaux)
          if (t.e == k) c += t.sign * lr_pair(d, d, t.tau_bar);
        if (c != 0) (*out)[d.key()] = c;
      }
    }
    return CoeffTable(std::move(out));
  });
  return *table;
}

MultiPoly k_polynomial_by_classes(const Partition& nubar) {
  MultiPoly k;
  for (const auto& [key, c] : class_coefficients(nubar)) k += p_polynomial(DiagramClass::parse(key)) * Rational(c);
  return k;
}

Integer g_square(const Partition& la, const Partition& nubar) {
  require_threshold(la.size(), nubar);
  const auto& coeffs = class_coefficients(nubar);
  Integer total = 0;
  for (const auto& [key, r] : removable_census(la, nubar.size())) {
    auto it = coeffs.find(key);
    if (it != coeffs.end()) total += it->second * r;
  }
  return total;
}

Integer g_square_column(const Partition& la, int d) {
  if (la.size() <= d) throw std::invalid_argument("g_square_column needs n > d");
  Integer total = 0;
  for (const auto& [key, r] : removable_census(la, d)) {
    DiagramClass cls = DiagramClass::parse(key);
    Integer pairing = 0;
    for (const auto& alpha : partitions_of(cls.size()))
      pairing += lr_coefficient(cls, alpha) * lr_coefficient(cls, conjugate(alpha));
    total += ((d - cls.size()) % 2 ? -pairing : pairing) * r;
  }
  return total;
}

Integer pair_removable(const Partition& la, const Partition& mu, const DiagramClass& d, const DiagramClass& e) {
  if (la.size() != mu.size()) throw std::invalid_argument("pair_removable: |lambda| != |mu|");
  if (d.size() != e.size()) throw std::invalid_argument("pair_removable: |D| != |E|");
  const auto& census = pair_census(la, mu, d.size());
  auto it = census.find({d.key(), e.key()});
  return it == census.end() ? Integer(0) : it->second;
}

Integer g_general(const Partition& la, const Partition& mu, const Partition& nubar) {
  if (la.size() != mu.size()) throw std::invalid_argument("g_general: |lambda| != |mu|");
  require_threshold(la.size(), nubar);
  const auto& tableaux = enumerate_sbst(nu_tilde(nubar));
  Integer total = 0;
  for (const auto& [keys, r] : pair_census(la, mu, nubar.size())) {
    DiagramClass d = DiagramClass::parse(keys.first), e = DiagramClass::parse(keys.second);
    Integer c = 0;
    for (const auto& t : tableaux)
      if (t.e == d.size()) c += t.sign * lr_pair(d, e, t.tau_bar);
    total += c * r;
  }
  return total;
}

Integer g_rt(const Partition& la, const Partition& mu, const Partition& nubar) {
  if (la.size() != mu.size()) throw std::invalid_argument("g_rt: |lambda| != |mu|");
  require_threshold(la.size(), nubar);
  Integer total = 0;
  for (const auto& t : enumerate_sbst(nu_tilde(nubar)))
    total += t.sign * lr_lambda_mu(la, mu, shifted_tau(t, nubar, la.size()));
  return total;
}

Integer kronecker_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
  if (la.size() != mu.size() || la.size() != nu.size())
    throw std::invalid_argument("kronecker_coefficient: size mismatch");
  if (la.size() == 0) return 1;
  return g_general(la, mu, tail(nu));
}

Integer class_coefficient(const DiagramClass& d, const Partition& nubar) {
  if (d.size() != nubar.size()) throw std::invalid_argument("class_coefficient: |D| != |nubar|");
  if (d.empty()) return 1;
  CharacterVector chi = skew_character(d);
  Integer total = 0;
  for (const auto& [alpha, ca] : chi.terms())
    for (const auto& [beta, cb] : chi.terms()) total += ca * cb * kronecker_coefficient(alpha, beta, nubar);
  return total;
}

Integer delta_coefficient(const Partition& nubar, int k) {
  if (k < 1 || k > nubar.size()) throw std::invalid_argument("delta_coefficient: k out of range");
  Integer total = 0;
  for (const auto& t : enumerate_sbst(nu_tilde(nubar)))
    if (t.e == k) total += t.sign * multinomial(t.tau_bar);
  return total * factorial(k);
}

namespace {

Partition rectangle(int a, int b) { return Partition(std::vector<int>(b, a)); }

}  // namespace

Integer rectangle_square(int a, int b, int d) {
  if (a < 1 || b < 1 || d < 0 || a * b < 2 * d) throw std::invalid_argument("rectangle_square needs ab >= 2d");
  Partition box = rectangle(a, b);
  Integer fits = static_cast<long>(partitions_between(Partition{}, box, d).size());
  Integer smaller = d >= 1 ? static_cast<long>(partitions_between(Partition{}, box, d - 1).size()) : 0;
  return fits - smaller;
}

Integer rectangle_hook(int a, int b, int d) {
  if (a < 1 || b < 1 || d < 0 || a * b <= d) throw std::invalid_argument("rectangle_hook needs ab > d");
  Partition box = rectangle(a, b);
  Integer total = 0;
  for (int k = 0; k <= d; ++k) {
    long self_conjugate = 0;
    for (const auto& alpha : partitions_between(Partition{}, box, k))
      if (alpha == conjugate(alpha)) ++self_conjugate;
    total += ((d - k) % 2 ? -self_conjugate : self_conjugate);
  }
  return total;
}

bool StabilityReport::all_equal() const {
  if (!hypothesis_ok) return false;
  for (const auto& r : rows)
    if (!r.equal) return false;
  return true;
}

StabilityReport stability_check(const Partition& la, const Partition& mu, const Partition& nu, int i, int k_max) {
  StabilityReport report;
  if (la.size() != mu.size() || la.size() != nu.size()) {
    report.violation = "lambda, mu, nu must have equal size";
    return report;
  }
  if (i < 1 || i > std::min(la.length(), mu.length())) {
    report.violation = "i must lie in [1, min(l(lambda), l(mu))]";
    return report;
  }
  int dep = depth(nu);
  if (la[i - 1] - la[i] < dep || mu[i - 1] - mu[i] < dep) {
    report.violation = "lambda_i - lambda_{i+1} and mu_i - mu_{i+1} must be at least depth(nu)=" + std::to_string(dep);
    return report;
  }
  report.hypothesis_ok = true;
  Integer base = kronecker_coefficient(la, mu, nu);
  for (int k = 1; k <= k_max; ++k) {
    Integer lhs = kronecker_coefficient(shift_rows(la, i, k), shift_rows(mu, i, k), shift_rows(nu, 1, k * i));
    report.rows.push_back({k, lhs, base, lhs == base});
  }
  return report;
}

}  // namespace kronsq
