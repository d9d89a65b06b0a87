#pragma once

#include "kronsq/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kronsq {

using Cell = std::pair<int, int>;  // (row, col), 1-based

struct SkewShape {
  Partition outer;
  Partition inner;

  int size() const { return outer.size() - inner.size(); }
  std::string str() const;  // "outer/inner"
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

SkewShape make_skew(const Partition& outer, const Partition& inner);
std::vector<Cell> cells(const SkewShape& s);
std::vector<std::vector<Cell>> connected_components(const SkewShape& s);
SkewShape conjugate(const SkewShape& s);

// One row of a normalized component: columns [s, e].
struct Segment {
  int s;
  int e;
  friend bool operator==(const Segment&, const Segment&) = default;
};
using Component = std::vector<Segment>;  // rows top to bottom

// Isomorphism class of skew diagrams (per-component translation and
// permutation of components). The key is canonical: components serialize as
// "s1:e1;s2:e2;..." and are joined with "|" after sorting by size (larger
// first) and then lexicographically.
class DiagramClass {
 public:
  DiagramClass() = default;
  static DiagramClass from_components(std::vector<Component> comps);
  static DiagramClass parse(const std::string& key);

  const std::string& key() const { return key_; }
  const std::vector<Component>& components() const { return comps_; }
  int size() const { return size_; }
  bool empty() const { return comps_.empty(); }
  bool connected() const { return comps_.size() == 1; }

  friend bool operator==(const DiagramClass& a, const DiagramClass& b) { return a.key_ == b.key_; }
  friend bool operator<(const DiagramClass& a, const DiagramClass& b) { return a.key_ < b.key_; }

 private:
  std::vector<Component> comps_;
  std::string key_;
  int size_ = 0;
};

std::string component_key(const Component& c);
int component_size(const Component& c);

DiagramClass classify(const SkewShape& s);
DiagramClass classify(const Partition& la);
// Cells must form a union of skew-shaped pieces (rows contiguous per component).
DiagramClass classify_cells(const std::vector<Cell>& cs);

SkewShape representative(const DiagramClass& d);
SkewShape disjoint_union(const SkewShape& a, const SkewShape& b);
DiagramClass disjoint_union(const DiagramClass& a, const DiagramClass& b);
DiagramClass conjugate_class(const DiagramClass& d);

bool is_border_strip(const DiagramClass& c);
DiagramClass principal_border_strip(const DiagramClass& c);
DiagramClass young_hull(const DiagramClass& c);
bool is_subclass(const DiagramClass& c, const DiagramClass& d);

// Connected classes first, then by key.
const std::vector<DiagramClass>& enumerate_classes(int k, bool connected_only);

std::vector<std::pair<DiagramClass, int>> sorted_decomposition(const DiagramClass& d);

int removable_corner_count(const SkewShape& s);
int removable_corner_count(const DiagramClass& d);

SkewShape rotate_180(const Partition& alpha);

DiagramClass square_class();
DiagramClass delta_class(int k);  // k disjoint squares

}  // namespace kronsq
