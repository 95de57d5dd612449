#pragma once

#include <json.hpp>

#include "sov/characters/characters.hpp"

namespace sov {

/// {"L": int, "lambda": [ints]}
nlohmann::ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::ordered_json& j);

/// [{"partition": {...}, "coeff": "p/q"}, ...] in partition order.
nlohmann::ordered_json expansion_to_json(const CharacterExpansion& e);
/// `L` is needed to type the empty expansion.
CharacterExpansion expansion_from_json(const nlohmann::ordered_json& j, std::size_t L);

}  // namespace sov
