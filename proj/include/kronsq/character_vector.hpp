#pragma once

#include "kronsq/partition.hpp"

#include <map>

namespace kronsq {

// Class function written in the irreducible basis: lambda -> multiplicity.
class CharacterVector {
 public:
  explicit CharacterVector(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Partition, Integer>& terms() const { return terms_; }

  Integer operator[](const Partition& la) const;
  void add(const Partition& la, const Integer& c);

  CharacterVector& operator+=(const CharacterVector& o);
  CharacterVector& operator*=(const Integer& c);

  friend bool operator==(const CharacterVector& a, const CharacterVector& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  std::map<Partition, Integer> terms_;  // no zero entries
};

Integer pairing(const CharacterVector& a, const CharacterVector& b);

}  // namespace kronsq
