#include "kronsq/diagram.hpp"

#include "kronsq/memo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kronsq {

std::string SkewShape::str() const { return "(" + outer.str() + ")/(" + inner.str() + ")"; }

SkewShape make_skew(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner))
    throw std::invalid_argument("inner partition (" + inner.str() + ") is not contained in (" + outer.str() + ")");
  return {outer, inner};
}

std::vector<Cell> cells(const SkewShape& s) {
  std::vector<Cell> out;
  for (int i = 0; i < s.outer.length(); ++i)
    for (int c = s.inner[i] + 1; c <= s.outer[i]; ++c) out.emplace_back(i + 1, c);
  return out;
}

std::vector<std::vector<Cell>> connected_components(const SkewShape& s) {
  // Rows of a skew shape are intervals; consecutive nonempty rows touch iff
  // the upper row starts at or before the end of the lower row.
  std::vector<std::vector<Cell>> out;
  std::vector<Cell> cur;
  int prev_start = 0;
  bool prev_nonempty = false;
  for (int i = 0; i < s.outer.length(); ++i) {
    int a = s.inner[i] + 1, b = s.outer[i];
    if (a > b) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      prev_nonempty = false;
      continue;
    }
    if (prev_nonempty && prev_start > b) {
      out.push_back(std::move(cur));
      cur.clear();
    }
    for (int c = a; c <= b; ++c) cur.emplace_back(i + 1, c);
    prev_start = a;
    prev_nonempty = true;
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

SkewShape conjugate(const SkewShape& s) { return {conjugate(s.outer), conjugate(s.inner)}; }

std::string component_key(const Component& c) {
  std::string k;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) k += ';';
    k += std::to_string(c[i].s) + ":" + std::to_string(c[i].e);
  }
  return k;
}

int component_size(const Component& c) {
  int n = 0;
  for (const auto& seg : c) n += seg.e - seg.s + 1;
  return n;
}

namespace {

void validate_component(const Component& c) {
  if (c.empty()) throw std::invalid_argument("empty component in diagram class");
  int min_s = c.front().s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].s < 1 || c[i].e < c[i].s) throw std::invalid_argument("bad row segment in component " + component_key(c));
    min_s = std::min(min_s, c[i].s);
    if (i + 1 < c.size()) {
      const auto& lo = c[i + 1];
      if (c[i].s < lo.s || c[i].e < lo.e || c[i].s > lo.e)
        throw std::invalid_argument("component rows do not form a connected skew diagram: " + component_key(c));
    }
  }
  if (min_s != 1) throw std::invalid_argument("component is not normalized to column 1: " + component_key(c));
}

}  // namespace

DiagramClass DiagramClass::from_components(std::vector<Component> comps) {
  std::vector<std::pair<int, std::string>> keyed;
  DiagramClass d;
  for (auto& c : comps) {
    validate_component(c);
    keyed.emplace_back(component_size(c), component_key(c));
  }
  std::vector<std::size_t> order(comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keyed[a].first != keyed[b].first) return keyed[a].first > keyed[b].first;
    return keyed[a].second < keyed[b].second;
  });
  for (std::size_t idx : order) {
    if (!d.key_.empty() || !d.comps_.empty()) d.key_ += '|';
    d.key_ += keyed[idx].second;
    d.size_ += keyed[idx].first;
    d.comps_.push_back(std::move(comps[idx]));
  }
  return d;
}

DiagramClass DiagramClass::parse(const std::string& key) {
  std::vector<Component> comps;
  if (key.empty()) return {};
  std::stringstream outer(key);
  std::string comp_text;
  while (std::getline(outer, comp_text, '|')) {
    Component comp;
    std::stringstream rows(comp_text);
    std::string row;
    while (std::getline(rows, row, ';')) {
      auto colon = row.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad class key '" + key + "'");
      try {
        std::size_t p1 = 0, p2 = 0;
        int s = std::stoi(row.substr(0, colon), &p1);
        int e = std::stoi(row.substr(colon + 1), &p2);
        if (p1 != colon || p2 != row.size() - colon - 1) throw std::invalid_argument("trailing");
        comp.push_back({s, e});
      } catch (const std::exception&) {
        throw std::invalid_argument("bad class key '" + key + "'");
      }
    }
    comps.push_back(std::move(comp));
  }
  return from_components(std::move(comps));
}

DiagramClass classify_cells(const std::vector<Cell>& cs) {
  std::set<Cell> pending(cs.begin(), cs.end());
  std::vector<Component> comps;
  while (!pending.empty()) {
    std::vector<Cell> stack{*pending.begin()};
    pending.erase(pending.begin());
    std::map<int, std::pair<int, int>> rows;  // row -> (min col, max col)
    std::map<int, int> counts;
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      auto it = rows.find(r);
      if (it == rows.end()) rows[r] = {c, c};
      else it->second = {std::min(it->second.first, c), std::max(it->second.second, c)};
      ++counts[r];
      for (Cell nb : {Cell{r - 1, c}, Cell{r + 1, c}, Cell{r, c - 1}, Cell{r, c + 1}}) {
        auto f = pending.find(nb);
        if (f != pending.end()) {
          stack.push_back(nb);
          pending.erase(f);
        }
      }
    }
    int min_c = rows.begin()->second.first;
    for (auto& [r, se] : rows) min_c = std::min(min_c, se.first);
    Component comp;
    for (auto& [r, se] : rows) {
      if (counts[r] != se.second - se.first + 1) throw std::invalid_argument("cell set has a row with a gap");
      comp.push_back({se.first - min_c + 1, se.second - min_c + 1});
    }
    comps.push_back(std::move(comp));
  }
  return DiagramClass::from_components(std::move(comps));
}

DiagramClass classify(const SkewShape& s) {
  std::vector<Component> comps;
  for (const auto& comp : connected_components(s)) {
    int min_c = comp.front().second;
    for (auto [r, c] : comp) min_c = std::min(min_c, c);
    Component out;
    int row = -1;
    for (auto [r, c] : comp) {
      if (r != row) {
        out.push_back({c - min_c + 1, c - min_c + 1});
        row = r;
      } else {
        out.back().e = c - min_c + 1;
      }
    }
    comps.push_back(std::move(out));
  }
  return DiagramClass::from_components(std::move(comps));
}

DiagramClass classify(const Partition& la) { return classify(SkewShape{la, {}}); }

SkewShape disjoint_union(const SkewShape& a, const SkewShape& b) {
  if (a.size() == 0) return b;
  if (b.size() == 0) return a;
  int l1 = a.outer.first();
  std::vector<int> outer, inner;
  for (int i = 0; i < b.outer.length(); ++i) {
    outer.push_back(l1 + b.outer[i]);
    inner.push_back(l1 + b.inner[i]);
  }
  for (int i = 0; i < a.outer.length(); ++i) {
    outer.push_back(a.outer[i]);
    inner.push_back(a.inner[i]);
  }
  return {Partition(outer), Partition(inner)};
}

SkewShape representative(const DiagramClass& d) {
  SkewShape rep;
  for (const auto& comp : d.components()) {
    std::vector<int> outer, inner;
    for (const auto& seg : comp) {
      outer.push_back(seg.e);
      inner.push_back(seg.s - 1);
    }
    rep = disjoint_union(rep, SkewShape{Partition(outer), Partition(inner)});
  }
  return rep;
}

DiagramClass disjoint_union(const DiagramClass& a, const DiagramClass& b) {
  std::vector<Component> comps = a.components();
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return DiagramClass::from_components(std::move(comps));
}

namespace {

std::vector<Cell> component_cells(const Component& c) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int col = c[i].s; col <= c[i].e; ++col) out.emplace_back(static_cast<int>(i) + 1, col);
  return out;
}

std::vector<Cell> class_cells(const DiagramClass& d) { return cells(representative(d)); }

void require_connected(const DiagramClass& c, const char* what) {
  if (!c.empty() && !c.connected())
    throw std::invalid_argument(std::string(what) + " needs a connected diagram class, got '" + c.key() + "'");
}

}  // namespace

DiagramClass conjugate_class(const DiagramClass& d) {
  std::vector<Cell> cs = class_cells(d);
  for (auto& [r, c] : cs) std::swap(r, c);
  return classify_cells(cs);
}

bool is_border_strip(const DiagramClass& c) {
  if (!c.connected()) return false;
  const auto& comp = c.components().front();
  for (std::size_t i = 0; i + 1 < comp.size(); ++i)
    if (comp[i + 1].e - comp[i].s + 1 != 1) return false;
  return true;
}

DiagramClass principal_border_strip(const DiagramClass& c) {
  if (c.empty()) return c;
  require_connected(c, "principal_border_strip");
  std::map<int, Cell> best;  // diagonal c - r -> cell with maximal r + c
  for (auto cell : component_cells(c.components().front())) {
    int diag = cell.second - cell.first;
    auto it = best.find(diag);
    if (it == best.end() || cell.first + cell.second > it->second.first + it->second.second) best[diag] = cell;
  }
  std::vector<Cell> strip;
  for (auto& [diag, cell] : best) strip.push_back(cell);
  return classify_cells(strip);
}

DiagramClass young_hull(const DiagramClass& c) {
  if (c.empty()) return c;
  require_connected(c, "young_hull");
  const auto& comp = c.components().front();
  Component hull(comp.size());
  int reach = 0;
  for (int i = static_cast<int>(comp.size()) - 1; i >= 0; --i) {
    reach = std::max(reach, comp[i].e);
    hull[i] = {1, reach};
  }
  return DiagramClass::from_components({hull});
}

bool is_subclass(const DiagramClass& c, const DiagramClass& d) {
  if (c.size() > d.size()) return false;
  SkewShape rep = representative(d);
  for (const auto& gamma : partitions_between(rep.inner, rep.outer, rep.outer.size() - c.size()))
    if (classify(SkewShape{rep.outer, gamma}) == c) return true;
  return false;
}

namespace {

void connected_rec(std::vector<Segment>& rows_bottom_up, int remaining, std::vector<DiagramClass>& out) {
  if (remaining == 0) {
    Component comp(rows_bottom_up.rbegin(), rows_bottom_up.rend());
    out.push_back(DiagramClass::from_components({comp}));
    return;
  }
  Segment below = rows_bottom_up.back();
  for (int s = below.s; s <= below.e; ++s) {
    for (int e = std::max(s, below.e); e - s + 1 <= remaining; ++e) {
      rows_bottom_up.push_back({s, e});
      connected_rec(rows_bottom_up, remaining - (e - s + 1), out);
      rows_bottom_up.pop_back();
    }
  }
}

std::vector<DiagramClass> connected_of_size(int k) {
  std::vector<DiagramClass> out;
  for (int len = 1; len <= k; ++len) {
    std::vector<Segment> rows{{1, len}};
    connected_rec(rows, k - len, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

using ClassList = std::shared_ptr<const std::vector<DiagramClass>>;
ConcurrentMemo<std::pair<int, bool>, ClassList> class_lists;

void multiset_rec(const std::vector<DiagramClass>& pool, std::size_t start, int remaining,
                  std::vector<Component>& cur, std::vector<DiagramClass>& out) {
  if (remaining == 0) {
    out.push_back(DiagramClass::from_components(cur));
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].size() > remaining) continue;
    cur.push_back(pool[i].components().front());
    multiset_rec(pool, i, remaining - pool[i].size(), cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<DiagramClass>& enumerate_classes(int k, bool connected_only) {
  if (k < 0) throw std::invalid_argument("enumerate_classes: negative size");
  auto list = class_lists.get_or_compute({k, connected_only}, [k, connected_only] {
    std::vector<DiagramClass> out;
    if (k == 0) {
      if (!connected_only) out.emplace_back();
      return ClassList(std::make_shared<std::vector<DiagramClass>>(std::move(out)));
    }
    out = connected_of_size(k);
    if (!connected_only) {
      std::vector<DiagramClass> pool;
      for (int j = 1; j < k; ++j) {
        const auto& c = enumerate_classes(j, true);
        pool.insert(pool.end(), c.begin(), c.end());
      }
      std::vector<DiagramClass> rest;
      std::vector<Component> cur;
      // at least two components: the first is one of the pool classes
      for (std::size_t i = 0; i < pool.size(); ++i) {
        cur.push_back(pool[i].components().front());
        multiset_rec(pool, i, k - pool[i].size(), cur, rest);
        cur.pop_back();
      }
      std::sort(rest.begin(), rest.end());
      rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
      out.insert(out.end(), rest.begin(), rest.end());
    }
    return ClassList(std::make_shared<std::vector<DiagramClass>>(std::move(out)));
  });
  return *list;
}

std::vector<std::pair<DiagramClass, int>> sorted_decomposition(const DiagramClass& d) {
  if (d.empty()) throw std::invalid_argument("sorted_decomposition of the empty class");
  std::map<std::string, int> counts;
  for (const auto& comp : d.components()) ++counts[component_key(comp)];
  std::vector<std::pair<DiagramClass, int>> out;
  for (auto& [key, m] : counts) out.emplace_back(DiagramClass::parse(key), m);
  return out;
}

int removable_corner_count(const SkewShape& s) {
  int r = 0;
  for (int i = 0; i < s.outer.length(); ++i)
    if (s.outer[i] > s.outer[i + 1] && s.inner[i] < s.outer[i]) ++r;
  return r;
}

int removable_corner_count(const DiagramClass& d) {
  int r = 0;
  for (const auto& comp : d.components()) {
    ++r;
    for (std::size_t i = 0; i + 1 < comp.size(); ++i)
      if (comp[i].e > comp[i + 1].e) ++r;
  }
  return r;
}

SkewShape rotate_180(const Partition& alpha) {
  int t = alpha.length(), a1 = alpha.first();
  std::vector<int> outer(t, a1), inner;
  for (int j = 0; j < t; ++j) inner.push_back(a1 - alpha[t - 1 - j]);
  return {Partition(outer), Partition(inner)};
}

DiagramClass square_class() { return DiagramClass::parse("1:1"); }

DiagramClass delta_class(int k) {
  std::vector<Component> comps(k, Component{{1, 1}});
  return DiagramClass::from_components(std::move(comps));
}

}  // namespace kronsq
