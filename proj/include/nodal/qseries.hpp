#pragma once

// Truncated q-series over Q and the quasi-modular series entering the
// generating function of node polynomials:
//
//   sum_r Z_r (DG_2)^r
//     = (DG_2/q)^{chi(L)} B_1^{K^2} B_2^{LK} / (Delta D^2 G_2 / q^2)^{chi(O_S)/2}
//
// with chi(L) = (∂ - k)/2 + chi(O_S) (Riemann-Roch) and chi(O_S) = (s + x)/12
// (Noether). Since sum_r Z_r t^r = exp(sum_i a_i t^i / i!), taking logs and
// matching the coefficient of each Chern number gives, with t = DG_2,
// A = log(DG_2/q) and B = log(Delta D^2 G_2 / q^2):
//
//   ∂:  sum_l (-1)^{l-1} D_l t^l / l = A/2
//   k:  sum_l (-1)^{l-1} E_l t^l / l = -A/2 + log B_2
//   s:  sum_l (-1)^{l-1} F_l t^l / l = A/12 + log B_1 - B/24
//   x:  sum_l (-1)^{l-1} G_l t^l / l = A/12 - B/24
//
// The ∂ and x lines involve no unknown series and are identities to check.
// The k and s lines determine log B_2 and log B_1.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/atable.hpp"
#include "nodal/exact.hpp"

namespace nodal {

inline constexpr int kDefaultSeriesOrder = 16;

/// c_0 + c_1 q + ... + c_T q^T; nothing is known beyond q^T.
class PowerSeries {
public:
  explicit PowerSeries(int order);
  PowerSeries(std::vector<Rational> coeffs);  // order = size - 1
  static PowerSeries constant(const Rational& c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const;

  PowerSeries truncated(int order) const;
  /// Divides by q^k; the leading k coefficients must vanish and the order drops by k.
  PowerSeries shift_down(int k) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
  std::vector<Rational> c_;
};

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
/// Requires c_0 = 0.
PowerSeries series_exp(const PowerSeries& s);
/// Requires c_0 = 1.
PowerSeries series_log(const PowerSeries& s);
PowerSeries series_pow(const PowerSeries& s, int r);
/// D = q d/dq.
PowerSeries d_operator(const PowerSeries& s);
/// sum_l coeffs[l-1] * inner^l; inner must have zero constant term.
PowerSeries compose_polynomial(std::span<const Rational> coeffs, const PowerSeries& inner);

/// G_2 = -1/24 + sum sigma(n) q^n through q^order.
PowerSeries eisenstein_g2(int order);
/// Delta = q prod_{m>0} (1 - q^m)^24 through q^order.
PowerSeries discriminant(int order);

/// Coefficient of q^n in (DG_2)^r.
Rational dg2_power_coeff(int r, int n);

/// log(DG_2/q) and log(Delta D^2 G_2 / q^2) through q^order.
PowerSeries log_dg2_over_q(int order);
PowerSeries log_delta_d2g2_over_q2(int order);

/// c_n = sum_r y_r(n) (-1)^{r-1} (F_r - G_r) / r for n <= order; c_0 = 0.
PowerSeries recover_log_b1(int order, const ATable& table);
/// Same series by substituting t = DG_2 into sum (-1)^{l-1}(F_l - G_l) t^l / l.
PowerSeries recover_log_b1_by_substitution(int order, const ATable& table);
PowerSeries recover_b1(int order, const ATable& table);
/// A/2 + sum_l (-1)^{l-1} E_l (DG_2)^l / l.
PowerSeries recover_log_b2(int order, const ATable& table);
PowerSeries recover_b2(int order, const ATable& table);

enum class Channel { d, k, s, x };
/// Parses "d", "∂", "k", "s" or "x"; throws std::invalid_argument.
Channel parse_channel(std::string_view name);
std::string channel_name(Channel c);

/// Per-channel residual of the log identity above through q^order.
PowerSeries gyz_channel_residual(Channel channel, int order, const ATable& table);

}  // namespace nodal
