#include "sov/algebra/varset.hpp"

#include <algorithm>
#include <stdexcept>

namespace sov {

namespace {

void validate(const std::vector<std::string>& names) {
  if (names.size() > VarSet::kMaxVariables) {
    throw std::invalid_argument("too many variables (max " +
                                std::to_string(VarSet::kMaxVariables) + ")");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name " + names[i]);
    }
  }
}

}  // namespace

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) {
  validate(names);
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet VarSet::numbered(std::string_view prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(first + i));
  return VarSet(std::move(names));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::size_t VarSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("variable " + std::string(name) + " not in " + to_string(*this));
}

VarSet VarSet::merged_with(const VarSet& other) const {
  std::vector<std::string> names = *names_;
  for (const auto& n : other.names()) {
    if (!contains(n)) names.push_back(n);
  }
  return VarSet(std::move(names));
}

VarSet VarSet::without(const std::vector<std::string>& drop) const {
  std::vector<std::string> names;
  for (const auto& n : *names_) {
    if (std::find(drop.begin(), drop.end(), n) == drop.end()) names.push_back(n);
  }
  return VarSet(std::move(names));
}

std::string to_string(const VarSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vs.name(i);
  }
  return out + "}";
}

}  // namespace sov
