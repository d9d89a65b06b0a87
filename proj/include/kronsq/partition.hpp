#pragma once

#include "kronsq/integer.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kronsq {

// Weakly decreasing positive parts; the empty vector is the empty partition.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else out of order throws.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based; rows past the end have length 0.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int first() const { return empty() ? 0 : parts_[0]; }

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using Composition = std::vector<int>;

Composition parse_composition(std::string_view text);
std::string composition_str(const Composition& c);
int composition_size(const Composition& c);

Partition conjugate(const Partition& la);
bool dominates(const Partition& la, const Partition& mu);
int depth(const Partition& la);
bool contains(const Partition& outer, const Partition& inner);
Partition intersection(const Partition& la, const Partition& mu);

// (n - d, nubar); throws when n < d + nubar_1.
Partition extend_nubar(const Partition& nubar, int n);
// nubar extended at the smallest admissible n.
Partition nu_tilde(const Partition& nubar);
// Drops the first part: (nu_2, nu_3, ...).
Partition tail(const Partition& nu);

// Reverse lexicographic order, e.g. (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
const std::vector<Partition>& partitions_of(int n);
// All partitions beta with inner <= beta <= outer (cellwise) and |beta| = size.
std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer, int size);

std::vector<Composition> compositions_of(int n);
Integer multinomial(const Composition& pi);
Partition sorted_partition(const Composition& c);

// First i parts increased by k.
Partition shift_rows(const Partition& mu, int i, int k);

}  // namespace kronsq
