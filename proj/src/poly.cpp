#include "kronsq/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kronsq {

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(const Variable& v) {
  MultiPoly p;
  p.add_term({{v, 1}}, 1);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Variable> MultiPoly::variables() const {
  std::set<Variable> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vs.insert(v);
  return {vs.begin(), vs.end()};
}

int MultiPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(multiply(ma, mb), ca * cb);
  *this = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly pow(const MultiPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  MultiPoly r = MultiPoly::constant(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

MultiPoly binomial_poly(const MultiPoly& base, const Rational& shift, int k) {
  if (k < 0) throw std::invalid_argument("binomial_poly: negative k");
  MultiPoly r = MultiPoly::constant(1);
  for (int j = 0; j < k; ++j) r *= base - MultiPoly::constant(shift + j);
  r *= Rational(1) / Rational(factorial(k));
  return r;
}

MultiPoly binomial_poly(const Variable& v, const Rational& shift, int k) {
  return binomial_poly(MultiPoly::variable(v), shift, k);
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& map) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(c);
    for (const auto& [v, e] : m) {
      auto it = map.find(v.key);
      if (it == map.end()) throw std::invalid_argument("substitute: no image for variable '" + v.key + "'");
      t *= pow(it->second, e);
    }
    out += t;
  }
  return out;
}

Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& values) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v.key);
      if (it == values.end()) throw std::invalid_argument("evaluate: no value for variable '" + v.key + "'");
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    total += t;
  }
  return total;
}

std::vector<std::pair<std::vector<int>, Rational>> graded_terms(const MultiPoly& p, const std::vector<Variable>& vars) {
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps(vars.size(), 0);
    for (const auto& [v, e] : m) {
      auto it = std::lower_bound(vars.begin(), vars.end(), v);
      if (it == vars.end() || !(*it == v)) throw std::invalid_argument("graded_terms: variable list is incomplete");
      exps[it - vars.begin()] = e;
    }
    out.emplace_back(std::move(exps), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int e : a.first) da += e;
    for (int e : b.first) db += e;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  auto vars = p.variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : graded_terms(p, vars)) {
    Rational a = abs(c);
    bool has_vars = std::any_of(exps.begin(), exps.end(), [](int e) { return e > 0; });
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (a != 1 || !has_vars) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!exps[i]) continue;
      if (wrote) os << '*';
      os << "x[" << vars[i].key << "]";
      if (exps[i] > 1) os << '^' << exps[i];
      wrote = true;
    }
  }
  return os.str();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::binomial(int a, const Rational& b) {
  UniPoly r = constant(1);
  for (int j = 0; j < a; ++j) r *= UniPoly({-(b + j), Rational(1)});
  return r * (Rational(1) / Rational(factorial(a)));
}

Rational UniPoly::coefficient(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Rational f = rem[i] / b.leading();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coefficient(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly monic_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coefficient(i);
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

int variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int v = 0, prev = 0;
  for (const auto& s : seq) {
    int sg = sign_of(s(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

void isolate(const UniPoly& g, const std::vector<UniPoly>& sturm, Rational a, Rational b, int count,
             const Rational& width, int mult, std::vector<RealRoot>& out) {
  // roots of g in (a, b]
  if (count == 0) return;
  if (count == 1) {
    if (g(b) == 0) {
      out.push_back({b, b, mult});
      return;
    }
    if (b - a < width) {
      out.push_back({a, b, mult});
      return;
    }
  }
  Rational m = (a + b) / 2;
  int vm = variations(sturm, m);
  int va = variations(sturm, a);
  int vb = variations(sturm, b);
  isolate(g, sturm, a, m, va - vm, width, mult, out);
  isolate(g, sturm, m, b, vm - vb, width, mult, out);
}

}  // namespace

std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& width) {
  std::vector<RealRoot> out;
  if (p.degree() < 1) return out;
  // Yun's square-free factorization: p = c * prod a_i^i
  UniPoly dp = p.derivative();
  UniPoly a0 = monic_gcd(p, dp);
  UniPoly b = divmod(p, a0).first;
  UniPoly c = divmod(dp, a0).first;
  UniPoly d = c - b.derivative();
  for (int mult = 1; b.degree() >= 1; ++mult) {
    UniPoly a = monic_gcd(b, d);
    if (a.degree() >= 1) {
      std::vector<UniPoly> sturm{a, a.derivative()};
      while (sturm.back().degree() >= 1) {
        UniPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
        if (r.is_zero()) break;
        sturm.push_back(r * Rational(-1));
      }
      Rational bound = 1;
      for (int i = 0; i < a.degree(); ++i) bound = std::max(bound, Rational(Rational(abs(a.coefficient(i) / a.leading())) + 1));
      Rational hi = 1;
      while (hi <= bound) hi *= 2;
      Rational lo = -hi;
      isolate(a, sturm, lo, hi, variations(sturm, lo) - variations(sturm, hi), width, mult, out);
    }
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; });
  return out;
}

std::string format_root(const RealRoot& r) {
  Rational mid = (r.lo + r.hi) / 2;
  if (r.lo == r.hi && mid.get_den() == 1) return mid.get_num().get_str();
  Rational scaled = mid * 100;
  Integer num = scaled.get_num(), den = scaled.get_den();
  Integer q;
  // round half away from zero
  Integer twice = 2 * num + (num >= 0 ? den : Integer(-den));
  Integer den2 = 2 * den;
  mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  bool neg = q < 0;
  Integer aq = abs(q);
  std::string whole = Integer(aq / 100).get_str();
  std::string frac = Integer(aq % 100).get_str();
  if (frac.size() < 2) frac = "0" + frac;
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string s = (neg ? "-" : "") + whole;
  if (!frac.empty()) s += "." + frac;
  return s;
}

}  // namespace kronsq
