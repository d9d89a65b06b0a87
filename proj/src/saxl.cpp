#include "kronsq/saxl.hpp"

#include "kronsq/kronecker.hpp"
#include "kronsq/memo.hpp"
#include "kronsq/removable.hpp"

#include <stdexcept>

namespace kronsq {

namespace {

ConcurrentMemo<Partition, PiecewisePoly> s_memo;
ConcurrentMemo<int, std::string> z_key_memo;

std::string z_key(int m) {
  return z_key_memo.get_or_compute(m, [m] { return staircase(m).z.key(); });
}

}  // namespace

StaircaseData staircase(int k) {
  if (k < 1) throw std::invalid_argument("staircase needs k >= 1");
  StaircaseData s;
  s.k = k;
  std::vector<int> rho, inner;
  for (int i = k; i >= 1; --i) rho.push_back(i);
  for (int i = k - 2; i >= 1; --i) inner.push_back(i);
  s.rho = Partition(rho);
  s.n = k * (k + 1) / 2;
  s.zeta = SkewShape{s.rho, Partition(inner)};
  s.z = principal_border_strip(classify(s.rho));
  return s;
}

std::optional<int> z_index(const DiagramClass& c) {
  if (!c.connected()) throw std::invalid_argument("z_index needs a connected class");
  DiagramClass b = principal_border_strip(c);
  if (b.size() % 2 == 0) return std::nullopt;
  int m = (b.size() + 1) / 2;
  if (b.key() == z_key(m)) return m;
  return std::nullopt;
}

PiecewisePoly f_D_ppf(const DiagramClass& d) {
  if (d.empty()) return PiecewisePoly::constant(1);
  std::vector<std::pair<int, int>> na;  // (n_t, a_t)
  for (const auto& [c, a] : sorted_decomposition(d)) {
    auto m = z_index(c);
    if (!m) return PiecewisePoly();
    na.emplace_back(*m, a);
  }
  PiecewisePoly f = PiecewisePoly::constant(1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    int b = 0;
    for (std::size_t t = 0; t < na.size(); ++t) b += (t <= i ? na[t].first - 1 : na[t].first) * na[t].second;
    f *= PiecewisePoly::f_ab(na[i].second, b);
  }
  return f;
}

Integer staircase_removable(int k, const DiagramClass& d) {
  if (d.empty()) return 1;
  Composition parts{0};
  int used = 0;
  for (const auto& [c, a] : sorted_decomposition(d)) {
    auto m = z_index(c);
    if (!m) return removable_count(staircase(k).rho, d);
    parts.push_back(a);
    used += *m * a;
  }
  if (k - used < 0) return 0;
  parts[0] = k - used;
  return multinomial(parts);
}

PiecewisePoly s_polynomial(const Partition& nubar) {
  return s_memo.get_or_compute(nubar, [&] {
    PiecewisePoly s;
    for (const auto& [key, c] : class_coefficients(nubar)) {
      PiecewisePoly f = f_D_ppf(DiagramClass::parse(key));
      s += f * Rational(c);
    }
    return s;
  });
}

SaxlBounds saxl_bounds(const Partition& nubar) {
  SaxlBounds b;
  int target = nubar.first() + nubar.size();
  b.t = 1;
  while (b.t * (b.t + 1) / 2 < target) ++b.t;
  b.c = std::max(nubar.size() - 1, b.t);
  return b;
}

UniPoly main_piece(const Partition& nubar) { return s_polynomial(nubar).piece_on(saxl_bounds(nubar).c); }

PositivityReport positivity_scan(const Partition& nubar, int k_max) {
  PositivityReport report;
  PiecewisePoly s = s_polynomial(nubar);
  int t = saxl_bounds(nubar).t;
  for (int k = t; k <= k_max; ++k) {
    Rational v = s(k);
    if (v.get_den() != 1) throw std::logic_error("s_polynomial took a non-integer value");
    bool positive = v > 0;
    if (!positive) ++report.non_positive;
    report.rows.push_back({k, v.get_num(), positive});
  }
  // count <= 2d - (1 + sqrt(S))/2  <=>  sqrt(S) <= 4d - 1 - 2 count
  int d = nubar.size();
  Integer rhs = 4 * d - 1 - 2 * report.non_positive;
  Integer big_s = 1 + 8 * (nubar.first() + d);
  report.bound_holds = report.non_positive == 0 || (rhs >= 0 && big_s <= rhs * rhs);
  return report;
}

Xd1Report xd1_coefficient_check(const Partition& nubar) {
  Xd1Report r;
  int d = nubar.size();
  if (d < 1) throw std::invalid_argument("xd1_coefficient_check needs a nonempty partition");
  r.hook = nubar.length() < 2 || nubar[1] <= 1;
  r.actual = main_piece(nubar).coefficient(d - 1);
  r.predicted = -Rational(f_count(nubar) * (Integer(d) * (d - 1) / 2 + 1));
  r.matches = r.actual == r.predicted;
  return r;
}

}  // namespace kronsq
