#include "kronsq/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace kronsq {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breaks, std::vector<UniPoly> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (breaks_.empty() || breaks_.front() != 0) throw std::invalid_argument("piecewise: first breakpoint must be 0");
  if (breaks_.size() != pieces_.size()) throw std::invalid_argument("piecewise: one piece per interval expected");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i - 1] < breaks_[i])) throw std::invalid_argument("piecewise: breakpoints must increase");
  merge_equal_neighbours();
}

PiecewisePoly PiecewisePoly::constant(const Rational& c) { return PiecewisePoly({Rational(0)}, {UniPoly::constant(c)}); }

PiecewisePoly PiecewisePoly::f_ab(int a, int b) {
  if (a < 1 || b < 0) throw std::invalid_argument("f_ab needs a >= 1 and b >= 0");
  int start = a + b - 1;
  if (start == 0) return PiecewisePoly({Rational(0)}, {UniPoly::binomial(a, b)});
  return PiecewisePoly({Rational(0), Rational(start)}, {UniPoly(), UniPoly::binomial(a, b)});
}

std::size_t PiecewisePoly::piece_index(const Rational& x) const {
  if (x < 0) throw std::invalid_argument("piecewise functions live on [0, inf)");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

bool PiecewisePoly::is_continuous() const {
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (pieces_[i - 1](breaks_[i]) != pieces_[i](breaks_[i])) return false;
  return true;
}

void PiecewisePoly::merge_equal_neighbours() {
  std::vector<Rational> b{breaks_.front()};
  std::vector<UniPoly> p{pieces_.front()};
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (pieces_[i] == p.back()) continue;
    b.push_back(breaks_[i]);
    p.push_back(pieces_[i]);
  }
  breaks_ = std::move(b);
  pieces_ = std::move(p);
}

template <class Op>
PiecewisePoly PiecewisePoly::combine(const PiecewisePoly& o, Op op) const {
  std::vector<Rational> merged = breaks_;
  merged.insert(merged.end(), o.breaks_.begin(), o.breaks_.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  std::vector<UniPoly> pieces;
  for (const auto& x : merged) pieces.push_back(op(piece_on(x), o.piece_on(x)));
  return PiecewisePoly(std::move(merged), std::move(pieces));
}

PiecewisePoly& PiecewisePoly::operator+=(const PiecewisePoly& o) {
  *this = combine(o, [](const UniPoly& a, const UniPoly& b) { return a + b; });
  return *this;
}

PiecewisePoly& PiecewisePoly::operator*=(const PiecewisePoly& o) {
  *this = combine(o, [](const UniPoly& a, const UniPoly& b) { return a * b; });
  return *this;
}

PiecewisePoly& PiecewisePoly::operator*=(const Rational& c) {
  for (auto& p : pieces_) p *= c;
  merge_equal_neighbours();
  return *this;
}

}  // namespace kronsq
