#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace urns {

/// Signed arbitrary-precision integer, used for signed intermediate values
/// (inclusion-exclusion terms, rational numerators).
using bigint = boost::multiprecision::cpp_int;

/// Arbitrary-precision nonnegative integer. All arithmetic is exact at any
/// magnitude; subtraction throws instead of going negative.
class natural {
 public:
  natural() = default;

  template <std::integral I>
  natural(I v) : value_(v) {
    if constexpr (std::is_signed_v<I>) {
      if (v < 0) throw std::domain_error("natural: negative value");
    }
  }

  explicit natural(bigint v) : value_(std::move(v)) {
    if (value_ < 0) throw std::domain_error("natural: negative value");
  }

  /// Parses a nonempty decimal digit string.
  static natural from_digits(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("natural: empty digit string");
    for (char c : digits) {
      if (c < '0' || c > '9') throw std::invalid_argument("natural: invalid digit string");
    }
    return natural(bigint(std::string(digits)));
  }

  const bigint& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  std::string str() const { return value_.str(); }
  double to_double() const { return value_.convert_to<double>(); }

  natural& operator+=(const natural& o) {
    value_ += o.value_;
    return *this;
  }
  natural& operator*=(const natural& o) {
    value_ *= o.value_;
    return *this;
  }
  natural& operator-=(const natural& o) {
    if (value_ < o.value_) throw std::domain_error("natural: subtraction underflow");
    value_ -= o.value_;
    return *this;
  }

  friend natural operator+(natural a, const natural& b) { return a += b; }
  friend natural operator*(natural a, const natural& b) { return a *= b; }
  friend natural operator-(natural a, const natural& b) { return a -= b; }

  friend bool operator==(const natural& a, const natural& b) { return a.value_ == b.value_; }
  friend bool operator!=(const natural& a, const natural& b) { return a.value_ != b.value_; }
  friend bool operator<(const natural& a, const natural& b) { return a.value_ < b.value_; }
  friend bool operator<=(const natural& a, const natural& b) { return a.value_ <= b.value_; }
  friend bool operator>(const natural& a, const natural& b) { return a.value_ > b.value_; }
  friend bool operator>=(const natural& a, const natural& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const natural& v) { return os << v.value_; }

 private:
  bigint value_;
};

/// Exact rational kept in lowest terms with a positive denominator (the
/// canonical form is maintained by the underlying cpp_rational).
class exact_rational {
 public:
  exact_rational() = default;

  template <std::integral I>
  exact_rational(I v) : value_(v) {}

  exact_rational(const bigint& num, const bigint& den) {
    if (den == 0) throw std::domain_error("exact_rational: zero denominator");
    // The backend insists on a positive denominator; move the sign up.
    value_ = den < 0 ? rational_rep(-num, -den) : rational_rep(num, den);
  }

  exact_rational(const natural& num, const natural& den)
      : exact_rational(num.value(), den.value()) {}

  bigint numerator() const { return boost::multiprecision::numerator(value_); }
  bigint denominator() const { return boost::multiprecision::denominator(value_); }
  double to_double() const { return value_.convert_to<double>(); }

  /// "p/q", or just "p" for integral values.
  std::string str() const {
    const bigint den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  friend exact_rational operator+(const exact_rational& a, const exact_rational& b) {
    return exact_rational(a.value_ + b.value_);
  }
  friend exact_rational operator-(const exact_rational& a, const exact_rational& b) {
    return exact_rational(a.value_ - b.value_);
  }

  friend bool operator==(const exact_rational& a, const exact_rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const exact_rational& a, const exact_rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const exact_rational& a, const exact_rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const exact_rational& a, const exact_rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const exact_rational& a, const exact_rational& b) { return b < a; }
  friend bool operator>=(const exact_rational& a, const exact_rational& b) { return b <= a; }

  friend std::ostream& operator<<(std::ostream& os, const exact_rational& v) {
    return os << v.str();
  }

 private:
  using rational_rep = boost::multiprecision::cpp_rational;

  explicit exact_rational(rational_rep v) : value_(std::move(v)) {}

  rational_rep value_;
};

}  // namespace urns
