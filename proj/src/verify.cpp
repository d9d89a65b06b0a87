#include "kronsq/verify.hpp"

#include "kronsq/diagram.hpp"
#include "kronsq/kronecker.hpp"
#include "kronsq/oracle.hpp"
#include "kronsq/removable.hpp"
#include "kronsq/saxl.hpp"
#include "kronsq/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kronsq::verify {

namespace {

MultiPoly X(const std::string& key) { return class_monomial(DiagramClass::parse(key)); }
MultiPoly K(long c) { return MultiPoly::constant(Rational(c)); }
MultiPoly B(const MultiPoly& base, long shift, int k) { return binomial_poly(base, Rational(shift), k); }

// Variables shared by the published formulas.
struct Vars {
  MultiPoly r = X("1:1");
  MultiPoly hh = X("1:2");
  MultiPoly vv = X("1:1;1:1");
  MultiPoly h2 = hh + vv;
  MultiPoly r3 = X("1:3") + X("1:1;1:1;1:1");
  MultiPoly t21 = X("1:2;1:1");
  MultiPoly gam = X("2:2;1:2");
  MultiPoly a4 = X("1:4") + X("1:1;1:1;1:1;1:1");
  MultiPoly b31 = X("1:3;1:1") + X("1:2;1:1;1:1");
  MultiPoly c22 = X("1:2;1:2");
  MultiPoly s33 = X("3:3;1:3") + X("2:2;2:2;1:2");
  MultiPoly q32 = X("2:3;1:2") + X("2:2;1:2;1:1");
  MultiPoly bb = B(X("1:2"), 0, 2) + B(X("1:1;1:1"), 0, 2);
  MultiPoly m = X("1:2") * X("1:1;1:1") - X("2:2;1:2");
};

// Shared shape of the size-4 lr formulas.
MultiPoly q_size4(const Vars& v, const std::vector<long>& c) {
  return K(c[0]) * v.a4 + K(c[1]) * v.b31 + K(c[2]) * v.c22 + K(c[3]) * v.s33 + K(c[4]) * v.q32 +
         K(c[5]) * (v.r - K(1)) * v.r3 + K(c[6]) * ((v.r - K(2)) * v.t21 + (v.r - K(1)) * v.gam) +
         K(c[7]) * v.bb + K(c[8]) * v.m + K(c[9]) * B(v.r, 1, 2) * v.h2 + K(c[10]) * B(v.r, 0, 4);
}

Item make_item(std::string name, bool pass, std::string expected, std::string actual) {
  return Item{std::move(name), pass, std::move(expected), std::move(actual)};
}

template <class T>
Item equal_item(std::string name, const T& expected, const T& actual) {
  std::ostringstream e, a;
  e << expected;
  a << actual;
  return make_item(std::move(name), expected == actual, e.str(), a.str());
}

Item poly_item(std::string name, const MultiPoly& expected, const MultiPoly& actual) {
  return make_item(std::move(name), expected == actual, to_string(expected), to_string(actual));
}

// Tally of a battery: reports the first few failures.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      if (failed < 3) first += (first.empty() ? "" : "; ") + what;
      ++failed;
    }
  }
  Item item(std::string name) const {
    return make_item(std::move(name), failed == 0 && checked > 0, std::to_string(checked) + " agree",
                     std::to_string(checked - failed) + " agree" + (first.empty() ? "" : " (" + first + ")"));
  }
};

std::string P(const Partition& p) { return "(" + p.str() + ")"; }

std::string g_label(const Partition& la, const Partition& mu, const Partition& nu) {
  return "g(" + P(la) + "," + P(mu) + "," + P(nu) + ")";
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

UniPoly from_descending(const std::vector<long>& coeffs) {
  std::vector<Rational> asc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) asc.emplace_back(*it);
  return UniPoly(asc);
}

std::vector<Partition> small_nubars(int max_size) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d)
    for (const auto& p : partitions_of(d)) out.push_back(p);
  return out;
}

void suite_evak(Report& rep) {
  for (const auto& [nubar, expected] : k_fixtures())
    rep.items.push_back(poly_item("k" + P(nubar), expected, k_polynomial(nubar)));
}

void suite_evalr(Report& rep) {
  for (const auto& [pibar, expected] : q_fixtures())
    rep.items.push_back(poly_item("q" + P(pibar), expected, q_polynomial(pibar.parts())));
}

void suite_pd(Report& rep) {
  for (const auto& [key, expected] : p_fixtures())
    rep.items.push_back(poly_item("p[" + key + "]", expected, p_polynomial(DiagramClass::parse(key))));

  // Adding k squares to a square-free E multiplies p_E by C(x_sq - c, k), c the corners of E.
  Tally law;
  MultiPoly r = X("1:1");
  for (int k = 1; k <= 4; ++k) {
    for (int e = 0; e + k <= 5; ++e) {
      for (const auto& cls : enumerate_classes(e, false)) {
        int squares = 0;
        if (!cls.empty())
          for (const auto& [c, a] : sorted_decomposition(cls))
            if (c == square_class()) squares += a;
        if (squares > 0) continue;
        MultiPoly lhs = p_polynomial(disjoint_union(cls, delta_class(k)));
        MultiPoly rhs = p_polynomial(cls) * B(r, removable_corner_count(cls), k);
        law.check(lhs == rhs, "E=" + cls.key() + ",k=" + std::to_string(k));
      }
    }
  }
  rep.items.push_back(law.item("delta law |E|+k<=5"));
}

void suite_oracle(Report& rep) {
  for (int n = 6; n <= 10; ++n) {
    Tally t;
    for (const auto& la : partitions_of(n)) {
      for (const auto& nubar : small_nubars(4)) {
        if (n < nubar.size() + nubar.first()) continue;
        Partition nu = extend_nubar(nubar, n);
        Integer fast = g_square(la, nubar);
        Integer slow = oracle::g_oracle(la, la, nu);
        t.check(fast == slow, g_label(la, la, nu) + ": " + to_string(fast) + " vs " + to_string(slow));
      }
    }
    rep.items.push_back(t.item("g_square n=" + std::to_string(n)));
  }

  std::mt19937_64 rng(20240611);
  Tally general, rt;
  for (int trial = 0; trial < 500; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const auto& ps = partitions_of(n);
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    const Partition& la = ps[pick(rng)];
    const Partition& mu = ps[pick(rng)];
    std::vector<Partition> nubars;
    for (const auto& nb : small_nubars(4))
      if (n >= nb.size() + nb.first()) nubars.push_back(nb);
    const Partition& nubar = nubars[std::uniform_int_distribution<std::size_t>(0, nubars.size() - 1)(rng)];
    Partition nu = extend_nubar(nubar, n);
    Integer slow = oracle::g_oracle(la, mu, nu);
    Integer a = g_general(la, mu, nubar);
    Integer b = g_rt(la, mu, nubar);
    general.check(a == slow, g_label(la, mu, nu) + ": " + to_string(a) + " vs " + to_string(slow));
    rt.check(b == slow, g_label(la, mu, nu) + ": " + to_string(b) + " vs " + to_string(slow));
  }
  rep.items.push_back(general.item("g_general random pairs n<=9"));
  rep.items.push_back(rt.item("g_rt random pairs n<=9"));
}

void suite_table1(Report& rep) {
  for (const auto& row : table1()) {
    std::string name = P(row.nubar);
    SaxlBounds bounds = saxl_bounds(row.nubar);
    UniPoly actual = main_piece(row.nubar);

    std::vector<long> expected_coeffs = row.coeffs;
    if (!row.derived.empty()) {
      int d = row.nubar.size();
      UniPoly fit = fit_from_staircases(row.nubar, 4);
      for (int pos : row.derived) {
        Rational c = fit.coefficient(d - pos);
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
          throw std::logic_error("non-integral fitted coefficient");
        expected_coeffs[pos] = c.get_num().get_si();
      }
    }
    UniPoly expected = from_descending(expected_coeffs);
    rep.items.push_back(make_item(name + " main piece", expected == actual, to_string(expected), to_string(actual)));
    rep.items.push_back(equal_item(name + " t", row.t, bounds.t));

    std::vector<std::string> roots;
    for (const auto& root : real_roots(actual, Rational(1, 1000000000)))
      for (int i = 0; i < root.multiplicity; ++i) roots.push_back(format_root(root));
    rep.items.push_back(make_item(name + " roots", roots == row.roots, join(row.roots), join(roots)));

    PiecewisePoly s = s_polynomial(row.nubar);
    Tally values;
    for (int k = bounds.t; k <= 7; ++k) {
      StaircaseData st = staircase(k);
      Integer g = g_square(st.rho, row.nubar);
      Rational v = s(k);
      values.check(v == Rational(g), "k=" + std::to_string(k) + ": " + to_fraction_string(v) + " vs " + to_string(g));
    }
    rep.items.push_back(values.item(name + " s(k)=g_square(rho_k) k<=7"));
  }
}

void suite_kostka(Report& rep) {
  for (int n = 1; n <= 8; ++n) {
    Tally t;
    const auto& ps = partitions_of(n);
    for (const auto& nu : ps) {
      for (const auto& mu : ps) {
        Integer sum = 0;
        for (const auto& la : ps) sum += kostka(nu, la.parts()) * inverse_kostka(la, mu);
        t.check(sum == (nu == mu ? 1 : 0), P(nu) + "," + P(mu));
      }
    }
    rep.items.push_back(t.item("K * K^-1 = I n=" + std::to_string(n)));
  }
}

void suite_sbst(Report& rep) {
  std::multiset<std::string> expected{"(5,3,2):+", "(5,4,1):-", "(6,2,2):-", "(6,4):+", "(7,2,1):+", "(7,3):-"};
  std::multiset<std::string> actual;
  for (const auto& t : enumerate_sbst(Partition{5, 3, 2})) actual.insert(P(t.gamma) + ":" + (t.sign > 0 ? "+" : "-"));
  auto show = [](const std::multiset<std::string>& s) { return join(std::vector<std::string>(s.begin(), s.end())); };
  rep.items.push_back(make_item("SBST(5,3,2) content:sign", expected == actual, show(expected), show(actual)));
}

void suite_census(Report& rep) {
  const std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> expected{
      {1, {1, 1}}, {2, {3, 2}}, {3, {7, 4}}, {4, {19, 9}}};
  for (const auto& [k, counts] : expected) {
    std::size_t total = enumerate_classes(k, false).size();
    std::size_t conn = enumerate_classes(k, true).size();
    std::string e = std::to_string(counts.first) + "," + std::to_string(counts.second);
    std::string a = std::to_string(total) + "," + std::to_string(conn);
    rep.items.push_back(make_item("classes of size " + std::to_string(k), e == a, e, a));
  }
}

void suite_rectangles(Report& rep) {
  Tally square, hook;
  for (int a = 1; a <= 12; ++a) {
    for (int b = 1; a * b <= 12; ++b) {
      int n = a * b;
      std::vector<int> rows(b, a);
      Partition box(rows);
      for (int d = 0; d <= 4; ++d) {
        std::string tag = "(" + std::to_string(a) + "^" + std::to_string(b) + "),d=" + std::to_string(d);
        if (n >= 2 * d) {
          Partition nubar = d ? Partition{d} : Partition{};
          Integer law = rectangle_square(a, b, d);
          Integer g = g_square(box, nubar);
          Integer o = oracle::g_oracle(box, box, extend_nubar(nubar, n));
          square.check(law == g && g == o, tag + ": " + to_string(law) + "/" + to_string(g) + "/" + to_string(o));
        }
        if (n > d) {
          Partition nubar(std::vector<int>(d, 1));
          Integer law = rectangle_hook(a, b, d);
          Integer g = g_square(box, nubar);
          Integer o = oracle::g_oracle(box, box, extend_nubar(nubar, n));
          hook.check(law == g && g == o, tag + ": " + to_string(law) + "/" + to_string(g) + "/" + to_string(o));
        }
      }
    }
  }
  rep.items.push_back(square.item("two-row third partition"));
  rep.items.push_back(hook.item("hook third partition"));
}

struct StabilityCase {
  Partition la, mu, nu;
  int i;
};

// Hypothesis-satisfying instances drawn from n <= 8, half of them with a nonzero coefficient.
std::vector<StabilityCase> stability_battery() {
  std::vector<StabilityCase> zero, nonzero;
  for (int n = 2; n <= 8; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& la : ps) {
      for (const auto& mu : ps) {
        if (mu < la) continue;
        for (const auto& nu : ps) {
          int dep = depth(nu);
          if (dep > 3) continue;
          for (int i = 1; i <= std::min(la.length(), mu.length()); ++i) {
            if (la[i - 1] - la[i] < dep || mu[i - 1] - mu[i] < dep) continue;
            StabilityCase c{la, mu, nu, i};
            (oracle::g_oracle(la, mu, nu) != 0 ? nonzero : zero).push_back(c);
          }
        }
      }
    }
  }
  std::mt19937_64 rng(7);
  std::shuffle(zero.begin(), zero.end(), rng);
  std::shuffle(nonzero.begin(), nonzero.end(), rng);
  std::vector<StabilityCase> out(nonzero.begin(), nonzero.begin() + std::min<std::size_t>(45, nonzero.size()));
  out.insert(out.end(), zero.begin(), zero.begin() + std::min<std::size_t>(15, zero.size()));
  return out;
}

void suite_stability(Report& rep) {
  auto battery = stability_battery();
  Tally eq, orc;
  int instances = 0;
  for (const auto& c : battery) {
    StabilityReport r = stability_check(c.la, c.mu, c.nu, c.i, 3);
    std::string tag = g_label(c.la, c.mu, c.nu) + ",i=" + std::to_string(c.i);
    if (!r.hypothesis_ok) {
      eq.check(false, tag + ": " + r.violation);
      continue;
    }
    ++instances;
    eq.check(r.all_equal(), tag);
    Integer base = oracle::g_oracle(c.la, c.mu, c.nu);
    orc.check(base == r.rows.front().rhs, tag + " base");
    for (const auto& row : r.rows) {
      Partition la = shift_rows(c.la, c.i, row.k), mu = shift_rows(c.mu, c.i, row.k);
      Partition nu = shift_rows(c.nu, 1, row.k * c.i);
      if (la.size() <= 12) orc.check(oracle::g_oracle(la, mu, nu) == row.lhs, tag + ",k=" + std::to_string(row.k));
    }
  }
  rep.items.push_back(equal_item("instances", std::string(">= 50"), std::string(instances >= 50 ? ">= 50" : std::to_string(instances))));
  rep.items.push_back(eq.item("stable for k=1..3"));
  rep.items.push_back(orc.item("oracle agreement n<=12"));
}

void suite_props(Report& rep) {
  Tally mono, transpose, bounds;
  for (int m = 1; m <= 4; ++m) {
    const auto& classes = enumerate_classes(m, false);
    const auto& ps = partitions_of(m);
    for (const auto& d : classes) {
      for (const auto& e : classes) {
        for (const auto& lo : ps)
          for (const auto& hi : ps)
            if (lo != hi && dominates(hi, lo))
              mono.check(lr_pair(d, e, lo.parts()) >= lr_pair(d, e, hi.parts()), d.key() + "," + e.key() + "," + P(lo));
        for (const auto& pi : ps)
          transpose.check(lr_pair(d, e, pi.parts()) == lr_pair(conjugate_class(d), conjugate_class(e), pi.parts()),
                          d.key() + "," + e.key() + "," + P(pi));
      }
      Integer low = 0;
      for (const auto& al : ps) {
        Integer c = lr_coefficient(d, al);
        low += c * c;
      }
      Integer f = f_count(d);
      for (const auto& pi : ps) {
        Integer v = lr_pair(d, d, pi.parts());
        bounds.check(low <= v && v <= f * f, d.key() + "," + P(pi));
      }
    }
  }
  rep.items.push_back(mono.item("lr dominance monotonicity |D|<=4"));
  rep.items.push_back(transpose.item("lr transpose symmetry |D|<=4"));
  rep.items.push_back(bounds.item("lr bounds |D|<=4"));

  Tally nonneg, paths;
  for (int n = 1; n <= 10; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& la : ps) {
      auto assignment = removable_assignment(la, 4);
      for (const auto& nubar : small_nubars(4)) {
        if (n < nubar.size() + nubar.first()) continue;
        Integer sq = g_square(la, nubar);
        nonneg.check(sq >= 0, "g_square" + P(la) + P(nubar));
        Rational viak = evaluate(k_polynomial(nubar), assignment);
        Rational viat = evaluate(k_tilde(nubar), assignment);
        paths.check(viak == Rational(sq) && viat == Rational(sq), P(la) + P(nubar));
        for (const auto& mu : ps) {
          if (mu < la) continue;
          nonneg.check(g_general(la, mu, nubar) >= 0, g_label(la, mu, nubar));
        }
      }
    }
  }
  rep.items.push_back(nonneg.item("g outputs nonnegative n<=10"));
  rep.items.push_back(paths.item("k and k~ evaluations equal g_square n<=10"));

  Tally master;
  for (int n = 4; n <= 11; ++n) {
    for (const auto& la : partitions_of(n)) {
      auto assignment = removable_assignment(la, 4);
      for (int k = 1; k <= 4; ++k)
        for (const auto& d : enumerate_classes(k, false))
          master.check(evaluate(p_polynomial(d), assignment) == Rational(removable_count(la, d)), P(la) + "," + d.key());
    }
  }
  rep.items.push_back(master.item("p_D master identity |D|<=4, 4<=n<=11"));
}

using SuiteFn = void (*)(Report&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"evak", suite_evak},         {"evalr", suite_evalr},         {"pd", suite_pd},
      {"oracle", suite_oracle},     {"table1", suite_table1},       {"kostka", suite_kostka},
      {"sbst", suite_sbst},         {"census", suite_census},       {"rectangles", suite_rectangles},
      {"stability", suite_stability}, {"props", suite_props}};
  return s;
}

}  // namespace

bool Report::passed() const { return failures() == 0 && !items.empty(); }

int Report::failures() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](const Item& i) { return !i.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& name) {
  for (const auto& [n, fn] : suites()) {
    if (n != name) continue;
    Report rep;
    rep.suite = name;
    auto start = std::chrono::steady_clock::now();
    fn(rep);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::pair<Partition, MultiPoly>> k_fixtures() {
  Vars v;
  const MultiPoly& r = v.r;
  auto c = [&](int k) { return B(r, 0, k); };
  return {
      {Partition{}, K(1)},
      {Partition{1}, r - K(1)},
      {Partition{2}, v.h2 + K(2) * c(2) - r},
      {Partition{1, 1}, K(2) * c(2) - r + K(1)},
      {Partition{3}, v.r3 + v.t21 + v.gam + (K(2) * r - K(3)) * v.h2 + K(6) * c(3) - K(2) * c(2)},
      {Partition{2, 1}, v.t21 + v.gam + (K(3) * r - K(4)) * v.h2 + K(12) * c(3) - K(4) * c(2) + r},
      {Partition{1, 1, 1}, v.t21 + v.gam + (r - K(1)) * v.h2 + K(6) * c(3) - K(2) * c(2) + r - K(1)},
      {Partition{4}, v.a4 + v.b31 + v.c22 + v.s33 + K(2) * v.q32 + (K(2) * r - K(3)) * v.r3 +
                         (K(3) * r - K(7)) * v.t21 + (K(3) * r - K(4)) * v.gam + K(3) * v.bb + K(2) * v.m +
                         (K(7) * c(2) - K(9) * r + K(9)) * v.h2 + K(24) * c(4) - K(6) * c(3)},
      {Partition{3, 1}, v.b31 + v.s33 + K(3) * v.q32 + (K(3) * r - K(4)) * v.r3 + (K(8) * r - K(18)) * v.t21 +
                            (K(8) * r - K(10)) * v.gam + K(5) * v.bb + K(4) * v.m +
                            (K(19) * c(2) - K(24) * r + K(25)) * v.h2 + K(72) * c(4) - K(18) * c(3) + K(2) * c(2)},
      {Partition{2, 2}, v.b31 + v.c22 + v.s33 + K(2) * v.q32 + (r - K(1)) * v.r3 + (K(5) * r - K(11)) * v.t21 +
                            (K(5) * r - K(6)) * v.gam + K(4) * v.bb + K(4) * v.m +
                            (K(12) * c(2) - K(15) * r + K(15)) * v.h2 + K(48) * c(4) - K(12) * c(3) + K(2) * c(2)},
      {Partition{2, 1, 1}, v.b31 + v.s33 + K(3) * v.q32 + (r - K(1)) * v.r3 + (K(8) * r - K(18)) * v.t21 +
                               (K(8) * r - K(10)) * v.gam + K(3) * v.bb + K(4) * v.m +
                               (K(17) * c(2) - K(21) * r + K(22)) * v.h2 + K(72) * c(4) - K(18) * c(3) +
                               K(4) * c(2) - r},
      {Partition{1, 1, 1, 1}, v.c22 + v.q32 + (K(3) * r - K(7)) * v.t21 + (K(3) * r - K(4)) * v.gam + v.bb +
                                  K(2) * v.m + (K(5) * c(2) - K(6) * r + K(6)) * v.h2 + K(24) * c(4) - K(6) * c(3) +
                                  K(2) * c(2) - r + K(1)},
  };
}

std::vector<std::pair<Partition, MultiPoly>> q_fixtures() {
  Vars v;
  const MultiPoly& r = v.r;
  MultiPoly tg = v.t21 + v.gam;
  return {
      {Partition{}, K(1)},
      {Partition{1}, r},
      {Partition{2}, v.h2 + K(2) * B(r, 0, 2)},
      {Partition{1, 1}, v.h2 + K(4) * B(r, 0, 2)},
      {Partition{3}, v.r3 + tg + K(2) * (r - K(1)) * v.h2 + K(6) * B(r, 0, 3)},
      {Partition{2, 1}, v.r3 + K(2) * tg + K(5) * (r - K(1)) * v.h2 + K(18) * B(r, 0, 3)},
      {Partition{1, 1, 1}, v.r3 + K(4) * tg + K(9) * (r - K(1)) * v.h2 + K(36) * B(r, 0, 3)},
      {Partition{4}, q_size4(v, {1, 1, 1, 1, 2, 2, 3, 3, 2, 7, 24})},
      {Partition{3, 1}, q_size4(v, {1, 2, 1, 2, 5, 5, 11, 8, 6, 26, 96})},
      {Partition{2, 2}, q_size4(v, {1, 3, 2, 3, 7, 6, 16, 12, 10, 38, 144})},
      {Partition{2, 1, 1}, q_size4(v, {1, 5, 2, 5, 13, 10, 32, 20, 18, 74, 288})},
      {Partition{1, 1, 1, 1}, q_size4(v, {1, 9, 4, 9, 25, 16, 64, 36, 36, 144, 576})},
  };
}

std::vector<std::pair<std::string, MultiPoly>> p_fixtures() {
  Vars v;
  auto cls = [](std::initializer_list<const char*> keys) {
    DiagramClass d;
    for (const char* k : keys) d = disjoint_union(d, DiagramClass::parse(k));
    return d.key();
  };
  return {
      {cls({"1:1", "1:2"}), (v.r - K(1)) * v.hh},
      {cls({"1:1", "1:1", "1:2"}), B(v.r, 1, 2) * v.hh},
      {cls({"1:2", "1:2"}), B(v.hh, 0, 2)},
      {cls({"1:2", "1:1;1:1"}), v.hh * v.vv - v.gam},
      {cls({"1:1", "1:3"}), (v.r - K(1)) * X("1:3")},
      {cls({"1:1", "1:2;1:1"}), (v.r - K(2)) * v.t21},
      {cls({"1:1", "2:2;1:2"}), (v.r - K(1)) * v.gam},
  };
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows{
      {Partition{1}, {1, -1}, {"1"}, 2, {}},
      {Partition{2}, {1, -2, 0}, {"0", "2"}, 3, {}},
      {Partition{1, 1}, {1, -2, 1}, {"1", "1"}, 2, {}},
      {Partition{3}, {1, -4, 4, -1}, {"0.38", "1", "2.62"}, 3, {}},
      {Partition{2, 1}, {2, -8, 8, -1}, {"0.15", "1.4", "2.45"}, 3, {}},
      {Partition{1, 1, 1}, {1, -4, 5, -2}, {"1", "1", "2"}, 3, {}},
      {Partition{4}, {1, -7, 17, -18, 7}, {"1", "3.32"}, 4, {}},
      {Partition{3, 1}, {3, -21, 51, -51, 18}, {"1", "1", "2", "3"}, 4, {}},
      {Partition{2, 2}, {2, -14, 34, -33, 11}, {"0.81", "1"}, 3, {}},
      {Partition{2, 1, 1}, {3, -21, 52, -53, 18}, {"0.69", "1.63", "2", "2.68"}, 3, {}},
      {Partition{1, 1, 1, 1}, {1, -7, 18, -20, 8}, {"1", "2", "2", "2"}, 3, {}},
      {Partition{5}, {1, -11, 48, -106, 119, -54}, {"1.56", "2", "3.79"}, 4, {}},
      {Partition{4, 1}, {4, -44, 192, -420, 462, -203}, {"1.41", "2.3", "3.52"}, 4, {}},
      {Partition{3, 2}, {5, -55, 240, -522, 567, -245}, {"1.42", "2.46", "3.27"}, 4, {}},
      {Partition{3, 1, 1}, {6, -66, 289, -632, 690, -300}, {"1.54", "2", "3.25"}, 4, {}},
      {Partition{2, 2, 1}, {5, -55, 241, -526, 571, -246}, {"1.53", "2", "3"}, 4, {}},
      {Partition{2, 1, 1, 1}, {4, -44, 194, -428, -470, -204}, {"1.41", "2", "3"}, 4, {4, 5}},
      {Partition{1, 1, 1, 1, 1}, {1, -11, 49, -110, 124, -56}, {"2", "2", "2"}, 3, {}},
  };
  return rows;
}

UniPoly fit_from_staircases(const Partition& nubar, int k0) {
  int d = nubar.size();
  // Lagrange interpolation through d + 1 consecutive staircases.
  UniPoly fit;
  for (int i = 0; i <= d; ++i) {
    int ki = k0 + i;
    UniPoly basis = UniPoly::constant(1);
    Rational denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      basis *= UniPoly::x() - UniPoly::constant(k0 + j);
      denom *= Rational(ki - (k0 + j));
    }
    Integer g = g_square(staircase(ki).rho, nubar);
    fit += basis * (Rational(g) / denom);
  }
  return fit;
}

}  // namespace kronsq::verify
