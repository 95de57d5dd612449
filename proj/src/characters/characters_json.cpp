#include "sov/characters/characters_json.hpp"

#include <stdexcept>

namespace sov {

nlohmann::ordered_json partition_to_json(const Partition& p) {
  nlohmann::ordered_json j;
  j["L"] = p.length();
  j["lambda"] = p.parts();
  return j;
}

Partition partition_from_json(const nlohmann::ordered_json& j) {
  Partition p(j.at("lambda").get<std::vector<int>>());
  if (j.at("L").get<std::size_t>() != p.length()) throw std::invalid_argument("partition JSON: L does not match lambda");
  return p;
}

nlohmann::ordered_json expansion_to_json(const CharacterExpansion& e) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [lambda, c] : e.coeffs()) {
    nlohmann::ordered_json item;
    item["partition"] = partition_to_json(lambda);
    item["coeff"] = c.to_string();
    out.push_back(std::move(item));
  }
  return out;
}

CharacterExpansion expansion_from_json(const nlohmann::ordered_json& j, std::size_t L) {
  CharacterExpansion e(L);
  for (const auto& item : j) {
    e.add(partition_from_json(item.at("partition")), Rational::parse(item.at("coeff").get<std::string>()));
  }
  return e;
}

}  // namespace sov
