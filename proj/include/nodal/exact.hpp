#pragma once

// Exact arithmetic primitives: unbounded integers, reduced rationals and
// univariate polynomials in the formal degree parameter d.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nodal {

/// Raised when an internal cross-check between two independent routes fails,
/// or when a quantity that must be integral is not.
class consistency_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BigInt {
public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static BigInt from_string(std::string_view s);
  std::string to_string() const { return v_.get_str(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;

  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
  bool divisible_by(const BigInt& d) const;
  /// Exact division; throws consistency_error when d does not divide *this.
  BigInt divexact(const BigInt& d) const;
  BigInt pow(unsigned e) const;

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  const mpz_class& raw() const { return v_; }

private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p" or "p/q". Throws std::invalid_argument.
  static Rational from_string(std::string_view s);
  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  BigInt numerator() const { return BigInt(v_.get_num()); }
  BigInt denominator() const { return BigInt(v_.get_den()); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// Throws consistency_error when the value is not integral.
  BigInt to_integer() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;
  Rational pow(unsigned e) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// Binomial coefficient, zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Dense polynomial over Q in the formal variable d, coefficients ascending.
class UniPolyD {
public:
  static constexpr int kZeroDegree = -1;

  UniPolyD() = default;
  UniPolyD(Rational c);  // NOLINT(google-explicit-constructor)
  UniPolyD(int c) : UniPolyD(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPolyD(std::vector<Rational> ascending);

  /// The polynomial d.
  static UniPolyD variable();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational evaluate(const Rational& d) const;

  friend UniPolyD operator+(const UniPolyD& a, const UniPolyD& b);
  friend UniPolyD operator-(const UniPolyD& a, const UniPolyD& b);
  friend UniPolyD operator*(const UniPolyD& a, const UniPolyD& b);
  UniPolyD operator-() const;
  UniPolyD& operator+=(const UniPolyD& o) { return *this = *this + o; }
  UniPolyD& operator-=(const UniPolyD& o) { return *this = *this - o; }
  UniPolyD& operator*=(const UniPolyD& o) { return *this = *this * o; }

  friend bool operator==(const UniPolyD& a, const UniPolyD& b) = default;

  /// Human form, highest degree first: "150d^2 - 444d + 315".
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const UniPolyD& p);

/// The unique polynomial of degree <= 2 through three points with distinct
/// abscissae. Throws std::invalid_argument on duplicates.
UniPolyD interpolate_quadratic(const std::array<std::pair<Rational, Rational>, 3>& points);

}  // namespace nodal
