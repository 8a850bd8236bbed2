#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tempval {

/// Thrown by Rational::from_decimal. `position()` is the 0-based offset of
/// the first offending character in the input.
class DecimalFormatError : public std::invalid_argument {
 public:
  DecimalFormatError(std::string message, std::size_t position)
      : std::invalid_argument(std::move(message)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exact rational number in lowest terms with a positive denominator.
/// The only representation of time, durations and numeric values.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses `[+-]?digits(.digits)?` exactly. Scientific notation is rejected.
  static Rational from_decimal(std::string_view text);
  /// Parses either a decimal literal or `p/q`.
  static Rational parse(std::string_view text);

  std::string numerator_string() const;
  std::string denominator_string() const;

  bool is_integer() const;
  bool is_negative() const { return sgn(value_) < 0; }
  bool is_zero() const { return sgn(value_) == 0; }
  /// True when the decimal expansion terminates (denominator = 2^a 5^b).
  bool has_terminating_decimal() const;

  /// Exact decimal when terminating ("1.25", "0", "-3"), else "p/q".
  std::string to_string() const;
  /// Always "p/q", or "p" for integers.
  std::string to_fraction_string() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_{0};
};

Rational midpoint(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& out, const Rational& r);

}  // namespace tempval

template <>
struct std::hash<tempval::Rational> {
  std::size_t operator()(const tempval::Rational& r) const noexcept { return r.hash(); }
};
