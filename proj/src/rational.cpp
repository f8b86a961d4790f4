#include "mms/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "mms/error.hpp"

namespace mms {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSignViolation: return "SignViolation";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kMismatchedDimensions: return "MismatchedDimensions";
    case ErrorCode::kMalformedPartition: return "MalformedPartition";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kConfigViolation: return "ConfigViolation";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kNonFiniteValue, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  const std::string lower = lowercase(s);
  if (lower == "inf" || lower == "+inf" || lower == "-inf" ||
      lower == "infinity" || lower == "nan") {
    throw Error(ErrorCode::kNonFiniteValue, "'" + std::string(text) + "'");
  }

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParseError,
                "not a rational: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (negative) p = -p;
  return Rational(p, q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFiniteValue, "non-finite floating point value");
  }
  return Rational(mpq_class(value));
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::kNonFiniteValue, "reciprocal of zero");
  Rational out;
  out.value_ = 1 / value_;
  return out;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw Error(ErrorCode::kNonFiniteValue, "division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::size_t Rational::hash() const {
  const mpz_srcptr num = value_.get_num_mpz_t();
  const mpz_srcptr den = value_.get_den_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_size(num)) * 31 +
                  static_cast<std::size_t>(mpz_sgn(num) + 1);
  if (mpz_size(num) > 0) h ^= mpz_getlimbn(num, 0) * 0x9e3779b97f4a7c15ULL;
  h ^= (mpz_getlimbn(den, 0) + 0x7f4a7c15ULL + (h << 6) + (h >> 2));
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace mms
