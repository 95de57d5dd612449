#include "sov/algebra/poly_json.hpp"

#include <stdexcept>

namespace sov {

using nlohmann::ordered_json;

ordered_json poly_to_json(const LaurentPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : p.terms()) {
    terms.push_back(ordered_json{{"e", t.exps.to_vector()},
                                 {"n", t.coeff.numerator_string()},
                                 {"d", t.coeff.denominator_string()}});
  }
  return ordered_json{{"vars", p.vars().names()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial JSON needs \"vars\" and \"terms\"");
  }
  VarSet vars(j.at("vars").get<std::vector<std::string>>());
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto e = t.at("e").get<std::vector<int>>();
    if (e.size() != vars.size()) throw std::invalid_argument("term exponent length mismatch");
    terms.push_back(Term{Exponents(std::span<const int>(e)),
                         Rational::from_strings(t.at("n").get<std::string>(), t.at("d").get<std::string>())});
  }
  return LaurentPoly::from_terms(std::move(vars), std::move(terms));
}

ordered_json series_to_json(const EpsSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(poly_to_json(c));
  return ordered_json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace sov
