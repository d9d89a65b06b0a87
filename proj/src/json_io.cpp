#include "kronsq/json_io.hpp"

#include <stdexcept>

namespace kronsq {

Json poly_to_json(const MultiPoly& p) {
  auto vars = p.variables();
  Json j;
  j["vars"] = Json::array();
  for (const auto& v : vars) j["vars"].push_back(v.key);
  j["terms"] = Json::array();
  for (const auto& [exps, c] : graded_terms(p, vars)) {
    Json t;
    t["c"] = to_fraction_string(c);
    t["e"] = exps;
    j["terms"].push_back(std::move(t));
  }
  return j;
}

MultiPoly poly_from_json(const Json& j, const std::function<int(const std::string&)>& weight_of) {
  std::vector<Variable> vars;
  for (const auto& k : j.at("vars")) {
    std::string key = k.get<std::string>();
    vars.push_back({weight_of(key), key});
  }
  MultiPoly p;
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("e").get<std::vector<int>>();
    if (exps.size() != vars.size()) throw std::invalid_argument("polynomial term has the wrong number of exponents");
    std::map<Variable, int> m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (exps[i] > 0) m[vars[i]] += exps[i];
    p.add_term(Monomial(m.begin(), m.end()), parse_rational(t.at("c").get<std::string>()));
  }
  return p;
}

Json unipoly_to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_fraction_string(c));
  return arr;
}

Json ppf_to_json(const PiecewisePoly& p) {
  Json j;
  j["breaks"] = Json::array();
  for (const auto& b : p.breaks()) j["breaks"].push_back(to_fraction_string(b));
  j["breaks"].push_back("inf");
  j["pieces"] = Json::array();
  for (const auto& piece : p.pieces()) j["pieces"].push_back(unipoly_to_json(piece));
  return j;
}

PiecewisePoly ppf_from_json(const Json& j) {
  std::vector<Rational> breaks;
  const auto& b = j.at("breaks");
  if (b.empty() || b.back().get<std::string>() != "inf") throw std::invalid_argument("piecewise breaks must end with inf");
  for (std::size_t i = 0; i + 1 < b.size(); ++i) breaks.push_back(parse_rational(b[i].get<std::string>()));
  std::vector<UniPoly> pieces;
  for (const auto& piece : j.at("pieces")) {
    std::vector<Rational> cs;
    for (const auto& c : piece) cs.push_back(parse_rational(c.get<std::string>()));
    pieces.emplace_back(std::move(cs));
  }
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

}  // namespace kronsq
