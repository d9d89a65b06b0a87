#include "kronsq/character_vector.hpp"

#include <stdexcept>

namespace kronsq {

Integer CharacterVector::operator[](const Partition& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CharacterVector::add(const Partition& la, const Integer& c) {
  if (la.size() != degree_) throw std::invalid_argument("character entry of the wrong degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding characters of different degree");
  for (const auto& [la, c] : o.terms_) add(la, c);
  return *this;
}

CharacterVector& CharacterVector::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [la, v] : terms_) v *= c;
  return *this;
}

Integer pairing(const CharacterVector& a, const CharacterVector& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("pairing characters of different degree");
  Integer s = 0;
  for (const auto& [la, c] : a.terms()) s += c * b[la];
  return s;
}

}  // namespace kronsq
