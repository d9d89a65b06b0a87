#include "kronsq/removable.hpp"

#include "kronsq/memo.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>

namespace kronsq {

namespace {

using Census = std::shared_ptr<const std::map<std::string, Integer>>;
ConcurrentMemo<std::pair<Partition, int>, Census> census_memo;
ConcurrentMemo<std::string, MultiPoly> p_memo;

}  // namespace

RemovableSet removable_set(const Partition& la, const DiagramClass& d) {
  RemovableSet out{la, d, {}};
  if (d.size() > la.size()) return out;
  for (const auto& alpha : partitions_between(Partition{}, la, la.size() - d.size()))
    if (classify(SkewShape{la, alpha}) == d) out.members.push_back(alpha);
  return out;
}

const std::map<std::string, Integer>& removable_census(const Partition& la, int max_size) {
  auto census = census_memo.get_or_compute({la, max_size}, [&] {
    auto out = std::make_shared<std::map<std::string, Integer>>();
    for (int k = 0; k <= std::min(max_size, la.size()); ++k)
      for (const auto& alpha : partitions_between(Partition{}, la, la.size() - k))
        ++(*out)[classify(SkewShape{la, alpha}).key()];
    return Census(std::move(out));
  });
  return *census;
}

Integer removable_count(const Partition& la, const DiagramClass& d) {
  const auto& census = removable_census(la, d.size());
  auto it = census.find(d.key());
  return it == census.end() ? Integer(0) : it->second;
}

Integer collage_count(const std::vector<DiagramClass>& parts, const DiagramClass& d) {
  SkewShape rep = representative(d);
  std::vector<Cell> all = cells(rep);
  if (all.size() > 63) throw std::invalid_argument("collage_count: diagram too large");
  auto index_of = [&](Cell c) { return std::find(all.begin(), all.end(), c) - all.begin(); };
  std::map<std::string, std::vector<std::uint64_t>> masks;
  for (const auto& part : parts) {
    if (masks.count(part.key())) continue;
    auto& list = masks[part.key()];
    if (part.size() > rep.size()) continue;
    for (const auto& beta : partitions_between(rep.inner, rep.outer, rep.outer.size() - part.size())) {
      SkewShape sub{rep.outer, beta};
      if (classify(sub) != part) continue;
      std::uint64_t m = 0;
      for (Cell c : cells(sub)) m |= std::uint64_t{1} << index_of(c);
      list.push_back(m);
    }
  }
  std::map<std::uint64_t, Integer> states{{0, 1}};
  for (const auto& part : parts) {
    std::map<std::uint64_t, Integer> next;
    for (const auto& [state, count] : states)
      for (std::uint64_t m : masks[part.key()]) next[state | m] += count;
    states = std::move(next);
  }
  std::uint64_t full = all.empty() ? 0 : (all.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << all.size()) - 1);
  auto it = states.find(full);
  return it == states.end() ? Integer(0) : it->second;
}

Variable class_variable(const DiagramClass& c) { return Variable{c.size(), c.key()}; }

MultiPoly class_monomial(const DiagramClass& c) { return MultiPoly::variable(class_variable(c)); }

MultiPoly p_polynomial(const DiagramClass& d) {
  if (d.empty()) return MultiPoly::constant(1);
  if (d.connected()) return class_monomial(d);
  return p_memo.get_or_compute(d.key(), [&] {
    auto decomposition = sorted_decomposition(d);
    std::vector<DiagramClass> parts;
    MultiPoly p = MultiPoly::constant(1);
    Integer symmetry = 1;
    int largest = 0;
    for (const auto& [c, a] : decomposition) {
      for (int i = 0; i < a; ++i) parts.push_back(c);
      p *= pow(class_monomial(c), a);
      symmetry *= factorial(a);
      largest = std::max(largest, c.size());
    }
    // Disjoint removable pieces never touch, so a collage of total size |d|
    // lands only in d itself; smaller targets need subtracting.
    for (int s = largest; s < d.size(); ++s) {
      for (const auto& e : enumerate_classes(s, false)) {
        Integer c = collage_count(parts, e);
        if (c != 0) p -= p_polynomial(e) * Rational(c);
      }
    }
    p *= Rational(1) / Rational(symmetry);
    return p;
  });
}

MultiPoly to_border_strips(const MultiPoly& p) {
  std::map<std::string, MultiPoly> images;
  for (const auto& v : p.variables())
    images[v.key] = class_monomial(principal_border_strip(DiagramClass::parse(v.key)));
  return substitute(p, images);
}

MultiPoly p_tilde(const DiagramClass& d) { return to_border_strips(p_polynomial(d)); }

std::map<std::string, Rational> removable_assignment(const Partition& la, int max_size) {
  std::map<std::string, Rational> values;
  const auto& census = removable_census(la, max_size);
  for (int k = 1; k <= max_size; ++k) {
    for (const auto& c : enumerate_classes(k, true)) {
      auto it = census.find(c.key());
      values[c.key()] = it == census.end() ? Rational(0) : Rational(it->second);
    }
  }
  return values;
}

}  // namespace kronsq
