#pragma once

#include <json.hpp>

#include "sov/algebra/eps_series.hpp"
#include "sov/algebra/laurent_poly.hpp"

namespace sov {

// Canonical encoding:
//   {"vars": [names...], "terms": [{"e": [ints], "n": "int", "d": "int"}, ...]}
// with terms in the polynomial's canonical order and integers as decimal strings.
nlohmann::ordered_json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::ordered_json& j);

/// {"order": N, "coeffs": [poly, ...]}
nlohmann::ordered_json series_to_json(const EpsSeries& s);

}  // namespace sov
