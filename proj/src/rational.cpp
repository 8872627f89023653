#include "ucf/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ucf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("BigRational: zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  mpq_class value;
  value.get_num() = mpz_class(strip_plus(num));
  value.get_den() = slash == std::string_view::npos ? mpz_class(1) : mpz_class(strip_plus(den));
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return BigRational(value);
}

std::string BigRational::str() const {
  // mpq_class::get_str already omits "/1" for canonical integers.
  return value_.get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

}  // namespace ucf
