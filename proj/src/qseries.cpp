#include "nodal/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative truncation order");
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("PowerSeries: need at least c_0");
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s[0] = c;
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v.is_zero(); });
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("PowerSeries: cannot extend truncation order");
  return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

PowerSeries PowerSeries::shift_down(int k) const {
  if (k < 0 || k > order()) throw std::invalid_argument("PowerSeries: bad shift");
  for (int i = 0; i < k; ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero()) {
      throw std::domain_error("PowerSeries: division by q^" + std::to_string(k) + " leaves a pole");
    }
  }
  return PowerSeries(std::vector<Rational>(c_.begin() + k, c_.end()));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out[n] = a[n] - b[n];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int T = std::min(a.order(), b.order());
  PowerSeries out(T);
  for (int i = 0; i <= T; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= T; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  PowerSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out[n] = s * a[n];
  return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

PowerSeries series_exp(const PowerSeries& s) {
  if (!s[0].is_zero()) throw std::domain_error("series_exp: constant term must be 0");
  const int T = s.order();
  PowerSeries g(T);
  g[0] = 1;
  // n g_n = sum_k k f_k g_{n-k}
  for (int n = 1; n <= T; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * s[k] * g[n - k];
    g[n] = acc / Rational(n);
  }
  return g;
}

PowerSeries series_log(const PowerSeries& s) {
  if (s[0] != Rational(1)) throw std::domain_error("series_log: constant term must be 1");
  const int T = s.order();
  PowerSeries l(T);
  for (int n = 1; n <= T; ++n) {
    Rational acc = Rational(n) * s[n];
    for (int k = 1; k < n; ++k) acc -= Rational(k) * l[k] * s[n - k];
    l[n] = acc / Rational(n);
  }
  return l;
}

PowerSeries series_pow(const PowerSeries& s, int r) {
  if (r < 0) throw std::invalid_argument("series_pow: exponent must be non-negative");
  PowerSeries out = PowerSeries::constant(1, s.order());
  PowerSeries base = s;
  for (unsigned e = static_cast<unsigned>(r); e; e >>= 1) {
    if (e & 1U) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

PowerSeries d_operator(const PowerSeries& s) {
  PowerSeries out(s.order());
  for (int n = 1; n <= s.order(); ++n) out[n] = Rational(n) * s[n];
  return out;
}

PowerSeries compose_polynomial(std::span<const Rational> coeffs, const PowerSeries& inner) {
  if (!inner[0].is_zero()) throw std::domain_error("compose_polynomial: inner series must vanish at q = 0");
  PowerSeries out(inner.order());
  PowerSeries power = PowerSeries::constant(1, inner.order());
  for (const Rational& c : coeffs) {
    power = power * inner;
    out += c * power;
  }
  return out;
}

PowerSeries eisenstein_g2(int order) {
  PowerSeries g(order);
  g[0] = Rational(BigInt(-1), BigInt(24));
  for (int d = 1; d <= order; ++d) {
    for (int m = d; m <= order; m += d) g[m] += Rational(d);
  }
  return g;
}

PowerSeries discriminant(int order) {
  if (order < 1) throw std::invalid_argument("discriminant: order must be at least 1");
  // prod (1 - q^m)^24 through q^{order-1}, then multiply by q
  std::vector<BigInt> p(static_cast<std::size_t>(order), BigInt(0));
  p[0] = 1;
  for (int m = 1; m < order; ++m) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int n = order - 1; n >= m; --n) p[static_cast<std::size_t>(n)] -= p[static_cast<std::size_t>(n - m)];
    }
  }
  PowerSeries out(order);
  for (int n = 1; n <= order; ++n) out[n] = p[static_cast<std::size_t>(n - 1)];
  return out;
}

Rational dg2_power_coeff(int r, int n) {
  if (r < 1) throw std::invalid_argument("dg2_power_coeff: r must be at least 1");
  if (n < r) return Rational(0);
  return series_pow(d_operator(eisenstein_g2(n)), r)[n];
}

PowerSeries log_dg2_over_q(int order) {
  return series_log(d_operator(eisenstein_g2(order + 1)).shift_down(1));
}

PowerSeries log_delta_d2g2_over_q2(int order) {
  const PowerSeries g2 = eisenstein_g2(order + 2);
  const PowerSeries prod = discriminant(order + 2) * d_operator(d_operator(g2));
  return series_log(prod.shift_down(2));
}

namespace {

void require_table(int order, const ATable& table) {
  if (order < 0) throw std::invalid_argument("series: negative truncation order");
  if (order > table.size()) {
    throw std::out_of_range("series: order " + std::to_string(order) + " needs a_i beyond the table (have " +
                            std::to_string(table.size()) + ")");
  }
}

// (-1)^{l-1} coeff_l / l for l = 1..order, coeff picked from the D..G columns.
template <typename Pick>
std::vector<Rational> log_channel_coeffs(int order, const ATable& table, Pick pick) {
  std::vector<Rational> out;
  for (int l = 1; l <= order; ++l) {
    Rational c = Rational(pick(table.form(l))) / Rational(l);
    out.push_back(l % 2 ? c : -c);
  }
  return out;
}

PowerSeries channel_sum(int order, const ATable& table, auto pick) {
  const auto coeffs = log_channel_coeffs(order, table, pick);
  return compose_polynomial(coeffs, d_operator(eisenstein_g2(order)));
}

}  // namespace

PowerSeries recover_log_b1(int order, const ATable& table) {
  require_table(order, table);
  const PowerSeries t = d_operator(eisenstein_g2(order));
  PowerSeries out(order);
  PowerSeries power = PowerSeries::constant(1, order);
  for (int r = 1; r <= order; ++r) {
    power = power * t;  // y_r(n) = power[n]
    const NodeLinearForm& f = table.form(r);
    Rational w = Rational(f.F - f.G) / Rational(r);
    if (r % 2 == 0) w = -w;
    for (int n = r; n <= order; ++n) out[n] += power[n] * w;
  }
  return out;
}

PowerSeries recover_log_b1_by_substitution(int order, const ATable& table) {
  require_table(order, table);
  return channel_sum(order, table, [](const NodeLinearForm& f) { return f.F - f.G; });
}

PowerSeries recover_b1(int order, const ATable& table) {
  const PowerSeries l = recover_log_b1(order, table);
  const std::vector<Rational> logs(l.coefficients().begin() + 1, l.coefficients().end());
  return PowerSeries(bell_transform(logs));
}

PowerSeries recover_log_b2(int order, const ATable& table) {
  require_table(order, table);
  return Rational(BigInt(1), BigInt(2)) * log_dg2_over_q(order) +
         channel_sum(order, table, [](const NodeLinearForm& f) { return f.E; });
}

PowerSeries recover_b2(int order, const ATable& table) {
  const PowerSeries l = recover_log_b2(order, table);
  const std::vector<Rational> logs(l.coefficients().begin() + 1, l.coefficients().end());
  return PowerSeries(bell_transform(logs));
}

Channel parse_channel(std::string_view name) {
  if (name == "d" || name == "∂" || name == "D") return Channel::d;
  if (name == "k" || name == "E") return Channel::k;
  if (name == "s" || name == "F") return Channel::s;
  if (name == "x" || name == "G") return Channel::x;
  throw std::invalid_argument("unknown channel '" + std::string(name) + "' (expected d, k, s or x)");
}

std::string channel_name(Channel c) {
  switch (c) {
    case Channel::d: return "d";
    case Channel::k: return "k";
    case Channel::s: return "s";
    case Channel::x: return "x";
  }
  return "?";
}

PowerSeries gyz_channel_residual(Channel channel, int order, const ATable& table) {
  require_table(order, table);
  const Rational half(BigInt(1), BigInt(2));
  const Rational twelfth(BigInt(1), BigInt(12));
  const Rational twenty_fourth(BigInt(1), BigInt(24));
  const PowerSeries A = log_dg2_over_q(order);
  switch (channel) {
    case Channel::d:
      return channel_sum(order, table, [](const NodeLinearForm& f) { return f.D; }) - half * A;
    case Channel::k:
      return channel_sum(order, table, [](const NodeLinearForm& f) { return f.E; }) + half * A -
             recover_log_b2(order, table);
    case Channel::s:
      return channel_sum(order, table, [](const NodeLinearForm& f) { return f.F; }) - twelfth * A +
             twenty_fourth * log_delta_d2g2_over_q2(order) - recover_log_b1(order, table);
    case Channel::x:
      return channel_sum(order, table, [](const NodeLinearForm& f) { return f.G; }) - twelfth * A +
             twenty_fourth * log_delta_d2g2_over_q2(order);
  }
  throw std::invalid_argument("unknown channel");
}

}  // namespace nodal
