#include "tempval/rational.hpp"

#include <cctype>
#include <ostream>

namespace tempval {

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational Rational::from_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t int_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i == int_begin) {
    throw DecimalFormatError("expected digit in decimal literal", i);
  }
  std::string digits(text.substr(int_begin, i - int_begin));
  std::size_t frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    const std::size_t frac_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == frac_begin) {
      throw DecimalFormatError("expected digit after decimal point", i);
    }
    frac_digits = i - frac_begin;
    digits.append(text.substr(frac_begin, frac_digits));
  }
  if (i != text.size()) {
    throw DecimalFormatError("unexpected character in decimal literal", i);
  }
  mpz_class numerator(digits, 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac_digits);
  if (negative) {
    numerator = -numerator;
  }
  mpq_class value(numerator, denominator);
  value.canonicalize();
  return Rational(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return from_decimal(text);
  }
  Rational num = from_decimal(text.substr(0, slash));
  Rational den;
  try {
    den = from_decimal(text.substr(slash + 1));
  } catch (const DecimalFormatError& e) {
    throw DecimalFormatError(e.what(), slash + 1 + e.position());
  }
  if (!num.is_integer() || !den.is_integer()) {
    throw DecimalFormatError("fraction parts must be integers", slash);
  }
  if (den.is_zero()) {
    throw DecimalFormatError("zero denominator", slash + 1);
  }
  return num / den;
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

bool Rational::has_terminating_decimal() const {
  mpz_class den = value_.get_den();
  for (unsigned long p : {2UL, 5UL}) {
    while (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    }
  }
  return den == 1;
}

std::string Rational::to_fraction_string() const {
  if (is_integer()) {
    return numerator_string();
  }
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::to_string() const {
  if (!has_terminating_decimal()) {
    return to_fraction_string();
  }
  if (is_integer()) {
    return numerator_string();
  }
  // Scale by 10^k until integral; k is the number of fraction digits.
  mpz_class num = abs(value_.get_num());
  const mpz_class den = value_.get_den();
  std::size_t k = 0;
  mpz_class scale = 1;
  while (true) {
    ++k;
    scale *= 10;
    if (mpz_divisible_p(mpz_class(num * scale).get_mpz_t(), den.get_mpz_t()) != 0) {
      break;
    }
  }
  std::string digits = mpz_class(num * scale / den).get_str();
  if (digits.size() <= k) {
    digits.insert(0, k + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - k, ".");
  return (is_negative() ? "-" : "") + digits;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
  if (other.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(value_.get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(value_.get_den_mpz_t());
  return h1 * 1000003U ^ h2 ^ static_cast<std::size_t>(sgn(value_) + 1);
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.to_string(); }

}  // namespace tempval
