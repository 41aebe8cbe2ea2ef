#pragma once

// Complete and partial exponential Bell polynomials.
//
//   sum_{r >= 0} P_r t^r / r! = exp( sum_{l >= 1} x_l t^l / l! )
//
// P_r is built from block signatures of set partitions of [r]: the
// coefficient of x_1^{j_1} ... x_r^{j_r} counts the partitions with j_i
// blocks of size i.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nodal/exact.hpp"

namespace nodal {

inline constexpr int kMaxBellOrder = 15;

/// Sparse multivariate polynomial over Q. Exponent vectors carry no trailing
/// zeros, so the same monomial has one key regardless of variable count.
class SparsePoly {
public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  SparsePoly() = default;
  static SparsePoly constant(const Rational& c);
  /// The variable with 0-based index i.
  static SparsePoly variable(int i);

  void add_term(Exponents e, const Rational& c);
  Rational coefficient(Exponents e) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  Rational evaluate(std::span<const Rational> values) const;
  /// Substitutes a polynomial for each variable.
  SparsePoly substitute(std::span<const SparsePoly> values) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Rational& s, const SparsePoly& p);
  SparsePoly pow(unsigned e) const;
  SparsePoly& operator+=(const SparsePoly& o);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// "x1^4 + 6*x1^2*x2 + ..." with the given variable names (defaults x1, x2, ...).
  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  static Exponents trimmed(Exponents e);
  Terms terms_;
};

SparsePoly complete_bell(int r);
SparsePoly partial_bell(int n, int l);

/// P_r(values). Evaluates by the signature sum and by the exponential series
/// and throws consistency_error if the two disagree.
Rational eval_complete_bell(int r, std::span<const Rational> values);
Rational eval_complete_bell_partition_sum(int r, std::span<const Rational> values);
Rational eval_complete_bell_exp(int r, std::span<const Rational> values);

/// b_0..b_n with b_r = P_r(1! c_1, ..., r! c_r) / r!, i.e. the coefficients of
/// exp(sum c_l q^l). log_coeffs holds c_1..c_n.
std::vector<Rational> bell_transform(std::span<const Rational> log_coeffs);

}  // namespace nodal
