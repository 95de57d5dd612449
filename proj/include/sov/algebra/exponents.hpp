#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sov/algebra/varset.hpp"

namespace sov {

/// Dense exponent vector of a Laurent monomial. Fixed inline capacity so that
/// terms never allocate; entries beyond size() are always zero.
class Exponents {
 public:
  using value_type = std::int16_t;

  Exponents() = default;
  explicit Exponents(std::size_t n);
  Exponents(std::initializer_list<int> values);
  explicit Exponents(std::span<const int> values);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, long v);

  bool is_zero() const;
  /// Sum of entries.
  long total_degree() const;
  std::vector<int> to_vector() const;

  Exponents& operator+=(const Exponents& o);
  Exponents& operator-=(const Exponents& o);
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }
  friend Exponents operator-(Exponents a, const Exponents& b) { return a -= b; }
  /// Multiplies every entry by k.
  Exponents scaled(long k) const;

  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  /// Lexicographic in variable order.
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < VarSet::kMaxVariables; ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.n_ <=> b.n_;
  }

  std::size_t hash() const;

 private:
  std::array<value_type, VarSet::kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const { return e.hash(); }
};

}  // namespace sov
