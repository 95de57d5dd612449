#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sov {

/// Ordered list of distinct variable names. Cheap to copy; the name list is
/// shared and immutable.
class VarSet {
 public:
  static constexpr std::size_t kMaxVariables = 16;

  VarSet();
  VarSet(std::initializer_list<std::string> names);
  explicit VarSet(std::vector<std::string> names);

  /// {prefix1, ..., prefixN}
  static VarSet numbered(std::string_view prefix, std::size_t count, std::size_t first = 1);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::invalid_argument when the name is absent.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// This set followed by the names of `other` not already present.
  VarSet merged_with(const VarSet& other) const;
  /// This set without the listed names.
  VarSet without(const std::vector<std::string>& names) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

std::string to_string(const VarSet& vs);

}  // namespace sov
