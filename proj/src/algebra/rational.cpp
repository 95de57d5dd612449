#include "sov/algebra/rational.hpp"

#include <stdexcept>

namespace sov {

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::from_strings(std::string_view n, std::string_view d) {
  mpz_class num = parse_integer(n);
  mpz_class den = parse_integer(d);
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_strings(text, "1");
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer() && is_integer()) {
    mpz_addmul(value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
    return;
  }
  value_ += a.value_ * b.value_;
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer() && is_integer()) {
    mpz_submul(value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
    return;
  }
  value_ -= a.value_ * b.value_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

}  // namespace sov
