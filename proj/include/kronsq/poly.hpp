#pragma once

#include "kronsq/integer.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kronsq {

// Variables sort by (weight, key); weight is the size of the class the key names.
struct Variable {
  int weight = 0;
  std::string key;
  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Sorted by variable, exponents positive.
using Monomial = std::vector<std::pair<Variable, int>>;

class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const Variable& v);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Variable> variables() const;
  int total_degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  void add_term(const Monomial& m, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;  // no zero coefficients
};

MultiPoly pow(const MultiPoly& p, int e);

// C(base - shift, k) = (base-shift)(base-shift-1)...(base-shift-k+1)/k!
MultiPoly binomial_poly(const MultiPoly& base, const Rational& shift, int k);
MultiPoly binomial_poly(const Variable& v, const Rational& shift, int k);

// Every variable of p must be mapped.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& map);
Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& values);

// Terms in graded lexicographic order (higher degree first).
std::vector<std::pair<std::vector<int>, Rational>> graded_terms(const MultiPoly& p, const std::vector<Variable>& vars);
std::string to_string(const MultiPoly& p);

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly x();
  static UniPoly constant(const Rational& c);
  // C(x - b, a)
  static UniPoly binomial(int a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator()(const Rational& x) const;

  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly monic_gcd(UniPoly a, UniPoly b);
std::string to_string(const UniPoly& p, const std::string& var = "x");

struct RealRoot {
  Rational lo, hi;  // isolating interval; lo == hi for an exact rational root
  int multiplicity = 1;
};

// Real roots with multiplicity, ascending; intervals narrower than width.
std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& width);
// Two-decimal rendering; exact integers print without decimals.
std::string format_root(const RealRoot& r);

}  // namespace kronsq
