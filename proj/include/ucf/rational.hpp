#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ucf {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes.
class BigRational {
 public:
  BigRational() = default;
  template <std::signed_integral T>
  BigRational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  BigRational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument for a zero denominator.
  BigRational(long numerator, long denominator);
  explicit BigRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p", "-p", or "p/q" (q nonzero). Throws std::invalid_argument.
  static BigRational parse(std::string_view text);

  [[nodiscard]] const mpq_class& raw() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  /// Exact form: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  /// Decimal approximation, for human-facing output only.
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

 private:
  mpq_class value_{0};
};

}  // namespace ucf
