#pragma once

#include "kronsq/poly.hpp"

#include <vector>

namespace kronsq {

// Function on [0, inf): piece i lives on [breaks[i], breaks[i+1]], the last
// piece on [breaks.back(), inf). breaks[0] == 0.
class PiecewisePoly {
 public:
  PiecewisePoly() : breaks_{Rational(0)}, pieces_{UniPoly()} {}
  PiecewisePoly(std::vector<Rational> breaks, std::vector<UniPoly> pieces);
  static PiecewisePoly constant(const Rational& c);
  // zero on [0, a+b-1], C(x-b, a) afterwards
  static PiecewisePoly f_ab(int a, int b);

  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<UniPoly>& pieces() const { return pieces_; }

  // Index of the piece used at x (the rightmost piece whose left end is <= x).
  std::size_t piece_index(const Rational& x) const;
  const UniPoly& piece_on(const Rational& x) const { return pieces_[piece_index(x)]; }
  Rational operator()(const Rational& x) const { return piece_on(x)(x); }

  bool is_continuous() const;

  PiecewisePoly& operator+=(const PiecewisePoly& o);
  PiecewisePoly& operator*=(const PiecewisePoly& o);
  PiecewisePoly& operator*=(const Rational& c);
  friend PiecewisePoly operator+(PiecewisePoly a, const PiecewisePoly& b) { return a += b; }
  friend PiecewisePoly operator*(PiecewisePoly a, const PiecewisePoly& b) { return a *= b; }
  friend PiecewisePoly operator*(PiecewisePoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

 private:
  template <class Op>
  PiecewisePoly combine(const PiecewisePoly& o, Op op) const;
  void merge_equal_neighbours();

  std::vector<Rational> breaks_;
  std::vector<UniPoly> pieces_;
};

}  // namespace kronsq
