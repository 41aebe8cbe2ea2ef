#include "nodal/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace nodal {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

BigInt BigInt::from_string(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(mpz_class(std::string(s), 10));
}

long BigInt::to_long() const {
  if (!fits_long()) throw std::out_of_range("integer does not fit in long: " + to_string());
  return v_.get_si();
}

bool BigInt::divisible_by(const BigInt& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

BigInt BigInt::divexact(const BigInt& d) const {
  if (d.is_zero() || !divisible_by(d)) {
    throw consistency_error(to_string() + " is not divisible by " + d.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return BigInt(std::move(q));
}

BigInt BigInt::pow(unsigned e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
  auto num = BigInt::from_string(s.substr(0, slash));
  auto den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("denominator must be unsigned: '" + std::string(s) + "'");
  }
  auto den = BigInt::from_string(den_text);
  if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw consistency_error("expected an integer, got " + to_string());
  return BigInt(mpz_class(v_.get_num()));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative, got " + std::to_string(n));
  if (k < 0 || k > n) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigInt(std::move(r));
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: n must be non-negative, got " + std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return BigInt(std::move(r));
}

// --- UniPolyD ---------------------------------------------------------------

UniPolyD::UniPolyD(Rational c) {
  c_.push_back(std::move(c));
  trim();
}

UniPolyD::UniPolyD(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPolyD UniPolyD::variable() { return UniPolyD(std::vector<Rational>{0, 1}); }

void UniPolyD::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPolyD::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPolyD::evaluate(const Rational& d) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * d + *it;
  return acc;
}

UniPolyD operator+(const UniPolyD& a, const UniPolyD& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UniPolyD(std::move(r));
}

UniPolyD UniPolyD::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& c : r) c = -c;
  return UniPolyD(std::move(r));
}

UniPolyD operator-(const UniPolyD& a, const UniPolyD& b) { return a + (-b); }

UniPolyD operator*(const UniPolyD& a, const UniPolyD& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPolyD(std::move(r));
}

std::string UniPolyD::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i >= 1) os << "d";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPolyD& p) { return os << p.to_string(); }

UniPolyD interpolate_quadratic(const std::array<std::pair<Rational, Rational>, 3>& points) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("interpolate_quadratic: duplicate abscissa " +
                                    points[i].first.to_string());
      }
    }
  }
  UniPolyD result;
  const UniPolyD d = UniPolyD::variable();
  for (std::size_t i = 0; i < 3; ++i) {
    UniPolyD basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      basis *= d - UniPolyD(points[j].first);
      denom *= points[i].first - points[j].first;
    }
    result += basis * UniPolyD(points[i].second / denom);
  }
  return result;
}

}  // namespace nodal
