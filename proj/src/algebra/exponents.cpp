#include "sov/algebra/exponents.hpp"

#include <limits>
#include <stdexcept>

namespace sov {

namespace {

Exponents::value_type narrow(long v) {
  if (v > std::numeric_limits<Exponents::value_type>::max() ||
      v < std::numeric_limits<Exponents::value_type>::min()) {
    throw std::overflow_error("exponent out of range");
  }
  return static_cast<Exponents::value_type>(v);
}

void check_size(std::size_t n) {
  if (n > VarSet::kMaxVariables) throw std::invalid_argument("exponent vector too long");
}

}  // namespace

Exponents::Exponents(std::size_t n) : n_(static_cast<std::uint8_t>(n)) { check_size(n); }

Exponents::Exponents(std::initializer_list<int> values)
    : Exponents(std::span<const int>(values.begin(), values.size())) {}

Exponents::Exponents(std::span<const int> values) : n_(static_cast<std::uint8_t>(values.size())) {
  check_size(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) e_[i] = narrow(values[i]);
}

void Exponents::set(std::size_t i, long v) {
  if (i >= n_) throw std::out_of_range("exponent index");
  e_[i] = narrow(v);
}

bool Exponents::is_zero() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0) return false;
  }
  return true;
}

long Exponents::total_degree() const {
  long s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += e_[i];
  return s;
}

std::vector<int> Exponents::to_vector() const { return {e_.begin(), e_.begin() + n_}; }

Exponents& Exponents::operator+=(const Exponents& o) {
  if (n_ != o.n_) throw std::invalid_argument("exponent length mismatch");
  for (std::size_t i = 0; i < n_; ++i) e_[i] = narrow(static_cast<long>(e_[i]) + o.e_[i]);
  return *this;
}

Exponents& Exponents::operator-=(const Exponents& o) {
  if (n_ != o.n_) throw std::invalid_argument("exponent length mismatch");
  for (std::size_t i = 0; i < n_; ++i) e_[i] = narrow(static_cast<long>(e_[i]) - o.e_[i]);
  return *this;
}

Exponents Exponents::scaled(long k) const {
  Exponents r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = narrow(k * e_[i]);
  return r;
}

std::size_t Exponents::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= static_cast<std::uint16_t>(e_[i]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace sov
