#pragma once

#include "kronsq/diagram.hpp"
#include "kronsq/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace kronsq {

struct RemovableSet {
  Partition lambda;
  DiagramClass d;
  std::vector<Partition> members;  // alpha with lambda/alpha in d
};

RemovableSet removable_set(const Partition& la, const DiagramClass& d);
Integer removable_count(const Partition& la, const DiagramClass& d);

// class key -> r_lambda(class) for every class of size <= max_size with a nonzero count.
const std::map<std::string, Integer>& removable_census(const Partition& la, int max_size);

// Number of tuples (s_1..s_m) of removable subdiagrams of representative(d),
// s_i in parts[i], whose union is the whole diagram.
Integer collage_count(const std::vector<DiagramClass>& parts, const DiagramClass& d);

Variable class_variable(const DiagramClass& c);
MultiPoly class_monomial(const DiagramClass& c);

// r_lambda(D) = p_D(r_lambda(C)) over connected classes C.
MultiPoly p_polynomial(const DiagramClass& d);
// p_D with each x_C replaced by t_{B(C)}.
MultiPoly p_tilde(const DiagramClass& d);
MultiPoly to_border_strips(const MultiPoly& p);

// Values r_lambda(C) for every connected class C of size <= max_size (zeros included).
std::map<std::string, Rational> removable_assignment(const Partition& la, int max_size);

}  // namespace kronsq
