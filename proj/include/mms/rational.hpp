#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mms {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(const mpq_class& value);

  // Accepts "p", "-p", "p/q". Throws Error{kNonFiniteValue} for a zero
  // denominator or "inf"/"nan", Error{kParseError} for anything else.
  static Rational parse(std::string_view text);

  // Exact value of a finite double. Throws kNonFiniteValue otherwise.
  static Rational from_double(double value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  // Always "p/q", including "p/1" for integers.
  std::string to_string() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

// Least common multiple of the denominators, 1 for an empty range.
template <class Range>
mpz_class common_denominator(const Range& values) {
  mpz_class result = 1;
  for (const Rational& v : values) {
    mpz_class den = v.denominator();
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), den.get_mpz_t());
  }
  return result;
}

}  // namespace mms

template <>
struct std::hash<mms::Rational> {
  std::size_t operator()(const mms::Rational& value) const noexcept {
    return value.hash();
  }
};
