#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sov {

/// Weakly decreasing tuple of nonnegative integers (lambda_1 >= ... >= lambda_L >= 0).
/// Zero parts are allowed; the length L is the number of variables.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  /// The zero partition of length L.
  static Partition zero(std::size_t L);
  /// Parses "2,1,0".
  static Partition parse(std::string_view text);

  std::size_t length() const { return parts_.size(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.front(); }
  bool is_zero() const { return parts_.front() == 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (a.parts_.size() != b.parts_.size()) return a.parts_.size() <=> b.parts_.size();
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing positive integers; mu = lambda + delta.
class MuVector {
 public:
  explicit MuVector(std::vector<int> mu);

  std::size_t length() const { return mu_.size(); }
  const std::vector<int>& values() const { return mu_; }
  int operator[](std::size_t i) const { return mu_[i]; }

  friend bool operator==(const MuVector&, const MuVector&) = default;

 private:
  std::vector<int> mu_;
};

/// mu_i = lambda_i + L - i + 1 (1-based i).
MuVector mu_from_lambda(const Partition& lambda);
/// delta = (L, L-1, ..., 1).
MuVector delta(std::size_t L);
/// lambda = mu - delta; inverse of mu_from_lambda.
Partition lambda_from_mu(const MuVector& mu);

/// All partitions of length L with largest part <= max_part, in lexicographic order.
std::vector<Partition> partitions_in_box(std::size_t L, int max_part);

}  // namespace sov
