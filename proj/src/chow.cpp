#include "nodal/chow.hpp"

#include <algorithm>
#include <sstream>

namespace nodal {

namespace {

void check_q_index(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) + " outside [1, " +
                            std::to_string(max) + "]");
  }
}

std::string join_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, c] : terms) {
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (sym.empty()) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag;
      os << sym;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace

ChernNumbers p2_chern(long degree) {
  return ChernNumbers{BigInt(degree) * BigInt(degree), BigInt(-3) * BigInt(degree), BigInt(9), BigInt(3)};
}

// --- LinearForm -------------------------------------------------------------

Rational LinearForm::evaluate(const ChernNumbers& c) const {
  return d * Rational(c.d) + k * Rational(c.k) + s * Rational(c.s) + x * Rational(c.x);
}

UniPolyD LinearForm::specialize_p2() const {
  return UniPolyD(std::vector<Rational>{Rational(9) * s + Rational(3) * x, Rational(-3) * k, d});
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  return {a.d + b.d, a.k + b.k, a.s + b.s, a.x + b.x};
}

LinearForm operator-(const LinearForm& a, const LinearForm& b) {
  return {a.d - b.d, a.k - b.k, a.s - b.s, a.x - b.x};
}

LinearForm operator*(const Rational& c, const LinearForm& f) { return {c * f.d, c * f.k, c * f.s, c * f.x}; }

std::string LinearForm::to_string() const {
  return join_terms({{"∂", d}, {"k", k}, {"s", s}, {"x", x}});
}

// --- GradedClass ------------------------------------------------------------

std::string ChowMonomial::to_string() const {
  std::vector<std::string> parts;
  auto emit = [&](const char* sym, int e) {
    if (e == 1) parts.emplace_back(sym);
    if (e > 1) parts.push_back(std::string(sym) + "^" + std::to_string(e));
  };
  emit("L", L);
  emit("K", K);
  emit("x", x);
  emit("H", H);
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

GradedClass GradedClass::constant(const Rational& c, int h_cap) {
  return monomial({}, c, h_cap);
}

GradedClass GradedClass::monomial(ChowMonomial m, const Rational& c, int h_cap) {
  GradedClass g(h_cap);
  g.add(m, c);
  return g;
}

void GradedClass::add(const ChowMonomial& m, const Rational& c) {
  if (c.is_zero() || m.surface_degree() > 2 || m.H > cap_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational GradedClass::coefficient(const ChowMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedClass GradedClass::degree_part(int degree) const {
  GradedClass g(cap_);
  for (const auto& [m, c] : terms_) {
    if (m.graded_degree() == degree) g.add(m, c);
  }
  return g;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
  GradedClass r(std::min(a.cap_, b.cap_));
  for (const auto& [m, c] : a.terms_) r.add(m, c);
  for (const auto& [m, c] : b.terms_) r.add(m, c);
  return r;
}

GradedClass operator*(const Rational& s, const GradedClass& a) {
  GradedClass r(a.cap_);
  for (const auto& [m, c] : a.terms_) r.add(m, s * c);
  return r;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) { return a + Rational(-1) * b; }

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  GradedClass r(std::min(a.cap_, b.cap_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add({ma.L + mb.L, ma.K + mb.K, ma.x + mb.x, ma.H + mb.H}, ca * cb);
    }
  }
  return r;
}

GradedClass GradedClass::pow(unsigned e) const {
  GradedClass result = constant(Rational(1), cap_);
  GradedClass base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

GradedClass GradedClass::inverse() const {
  const Rational c0 = coefficient({});
  if (c0.is_zero()) throw std::domain_error("GradedClass::inverse: constant term is zero");
  // (c0 (1 + u))^{-1} = c0^{-1} sum_k (-u)^k; u is nilpotent under truncation.
  const GradedClass u = c0.inverse() * (*this - constant(c0, cap_));
  const GradedClass minus_u = Rational(-1) * u;
  GradedClass sum = constant(Rational(1), cap_);
  GradedClass power = constant(Rational(1), cap_);
  while (true) {
    power = power * minus_u;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return c0.inverse() * sum;
}

std::string GradedClass::to_string() const {
  std::vector<std::pair<std::string, Rational>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (m == ChowMonomial{}) {
      parts.emplace_back("", c);
    } else {
      parts.emplace_back(m.to_string(), c);
    }
  }
  // Constant last.
  std::stable_partition(parts.begin(), parts.end(), [](const auto& p) { return !p.first.empty(); });
  return join_terms(parts);
}

GradedClass critical_class(int h_cap) {
  const GradedClass v = GradedClass::L(h_cap) + GradedClass::H(h_cap);
  return v.pow(3) + GradedClass::K(h_cap) * v.pow(2) + GradedClass::x(h_cap) * v;
}

GradedClass chern_principal_parts(int h_cap) {
  const GradedClass one = GradedClass::constant(1, h_cap);
  const GradedClass cv = one + GradedClass::L(h_cap) + GradedClass::H(h_cap);
  return (cv.pow(2) + cv * GradedClass::K(h_cap) + GradedClass::x(h_cap)) * cv;
}

GradedClass tangent_chern(int h_cap) {
  return GradedClass::constant(1, h_cap) - GradedClass::K(h_cap) + GradedClass::x(h_cap);
}

GradedClass inverse_tangent_chern(int h_cap) { return tangent_chern(h_cap).inverse(); }

LinearForm pushforward_to_Y(const GradedClass& c, int n) {
  if (n < 0 || n > c.h_cap()) {
    throw std::out_of_range("pushforward_to_Y: H power " + std::to_string(n) + " exceeds cap " +
                            std::to_string(c.h_cap()));
  }
  return LinearForm{c.coefficient({2, 0, 0, n}), c.coefficient({1, 1, 0, n}), c.coefficient({0, 2, 0, n}),
                    c.coefficient({0, 0, 1, n})};
}

GradedClass m_class_general(int r, int h_cap) {
  if (r < 1) throw std::out_of_range("m_class_general: r must be positive");
  const auto e = static_cast<unsigned>(r - 1);
  return chern_principal_parts(h_cap).pow(e) * inverse_tangent_chern(h_cap).pow(e) * critical_class(h_cap);
}

LinearForm q_general(int n) {
  check_q_index(n, kMaxQIndex, "q_general");
  return pushforward_to_Y(m_class_general(n), n);
}

LinearForm c_correction_general(int n) {
  check_q_index(n, 4, "c_correction_general");
  if (n <= 2) return {};
  if (n == 3) return Rational(-1) * pushforward_to_Y(m_class_general(2), 3);
  return Rational(-1) * (Rational(3, 2) * pushforward_to_Y(m_class_general(3), 4) -
                         Rational(2) * pushforward_to_Y(m_class_general(2), 4));
}

// --- P2Class ----------------------------------------------------------------

std::string P2Monomial::to_string() const {
  std::string out;
  if (l) out += l == 1 ? "l" : "l^" + std::to_string(l);
  if (H) {
    if (!out.empty()) out += "*";
    out += H == 1 ? "H" : "H^" + std::to_string(H);
  }
  return out.empty() ? "1" : out;
}

P2Class P2Class::constant(const UniPolyD& c, int h_cap) {
  P2Class p(h_cap);
  p.add({0, 0}, c);
  return p;
}

P2Class P2Class::l(int h_cap) {
  P2Class p(h_cap);
  p.add({1, 0}, UniPolyD(1));
  return p;
}

P2Class P2Class::H(int h_cap) {
  P2Class p(h_cap);
  p.add({0, 1}, UniPolyD(1));
  return p;
}

void P2Class::add(const P2Monomial& m, const UniPolyD& c) {
  if (c.is_zero() || m.l > 2 || m.H > cap_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UniPolyD P2Class::coefficient(int l_exp, int h_exp) const {
  auto it = terms_.find({l_exp, h_exp});
  return it == terms_.end() ? UniPolyD() : it->second;
}

P2Class operator+(const P2Class& a, const P2Class& b) {
  P2Class r(std::min(a.cap_, b.cap_));
  for (const auto& [m, c] : a.terms_) r.add(m, c);
  for (const auto& [m, c] : b.terms_) r.add(m, c);
  return r;
}

P2Class operator-(const P2Class& a, const P2Class& b) {
  P2Class r(std::min(a.cap_, b.cap_));
  for (const auto& [m, c] : a.terms_) r.add(m, c);
  for (const auto& [m, c] : b.terms_) r.add(m, -c);
  return r;
}

P2Class operator*(const P2Class& a, const P2Class& b) {
  P2Class r(std::min(a.cap_, b.cap_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add({ma.l + mb.l, ma.H + mb.H}, ca * cb);
  }
  return r;
}

P2Class P2Class::pow(unsigned e) const {
  P2Class result = constant(UniPolyD(1), cap_);
  P2Class base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::string P2Class::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second << ")";
    if (!(it->first == P2Monomial{})) os << "*" << it->first.to_string();
  }
  return os.str();
}

P2Class m_poly_p2(int n, int h_cap) {
  check_q_index(n, kMaxQIndex, "m_poly_p2");
  const UniPolyD d_minus_1 = UniPolyD::variable() - UniPolyD(1);
  const P2Class l = P2Class::l(h_cap);
  const P2Class H = P2Class::H(h_cap);
  const P2Class one = P2Class::constant(UniPolyD(1), h_cap);
  const P2Class shifted_l = P2Class::constant(d_minus_1, h_cap) * l;
  const P2Class inv_tangent = one - P2Class::constant(UniPolyD(3), h_cap) * l +
                              P2Class::constant(UniPolyD(6), h_cap) * l.pow(2);
  const auto e = static_cast<unsigned>(n - 1);
  return (one + H + shifted_l).pow(3 * e) * inv_tangent.pow(e) * (H + shifted_l).pow(3);
}

UniPolyD q_p2_extraction(int n) { return m_poly_p2(n).coefficient(2, n); }

namespace {

UniPolyD q_p2_closed_impl(int n, bool literal_constant) {
  if (n < 1) throw std::out_of_range("q_p2_closed: n must be positive");
  const Rational b1(binomial(3 * n - 3, n - 1));
  const Rational b2(binomial(3 * n - 3, n - 2));
  const Rational b3(binomial(3 * n - 3, n - 3));
  const Rational rn(n);
  const Rational f = Rational(3) * b1 + Rational(3) * b2 * (2 * rn - 1) + rn * b3 * (2 * rn - 1);
  const Rational g = Rational(-2) * rn * b3 * (5 * rn - 4) - Rational(3) * b2 * (7 * rn - 5) - Rational(6) * b1;
  const Rational middle = literal_constant ? Rational(29, 2) : Rational(29, 2) * rn;
  const Rational h = b3 * (Rational(25, 2) * rn * rn - middle + 3) + Rational(3) * b2 * (5 * rn - 4) +
                     Rational(3) * b1;
  return UniPolyD(std::vector<Rational>{h, g, f});
}

}  // namespace

UniPolyD q_p2_closed(int n) { return q_p2_closed_impl(n, false); }

UniPolyD q_p2_closed_literal(int n) { return q_p2_closed_impl(n, true); }

UniPolyD c_correction_p2(int n) {
  check_q_index(n, 4, "c_correction_p2");
  if (n <= 2) return {};
  if (n == 3) return -m_poly_p2(2).coefficient(2, 3);
  return -(UniPolyD(Rational(3, 2)) * m_poly_p2(3).coefficient(2, 4) -
           UniPolyD(2) * m_poly_p2(2).coefficient(2, 4));
}

BigInt multiple_point_degree(int r, long degree) {
  check_q_index(r, 4, "multiple_point_degree");
  std::vector<Rational> args;
  for (int i = 1; i <= r; ++i) {
    Rational sign_fact(factorial(i - 1));
    if ((i - 1) % 2) sign_fact = -sign_fact;
    args.push_back(sign_fact * (q_p2_extraction(i) + c_correction_p2(i)).evaluate(Rational(degree)));
  }
  return eval_complete_bell(r, args).to_integer();
}

BigInt equivalence_polydiagonal(const SetPartition& pi, const ChernNumbers& chern) {
  BigInt product(1);
  for (const auto& block : pi.blocks()) {
    product *= q_general(static_cast<int>(block.size())).evaluate(chern).to_integer();
  }
  return product;
}

SparsePoly inclusion_exclusion_equivalence(int r) {
  SparsePoly total;
  const SetPartition bottom = SetPartition::finest(r);
  for_each_partition(r, [&](const SetPartition& pi) {
    if (pi == bottom) return;
    SparsePoly term = SparsePoly::constant(Rational(-mobius_coefficient(pi)));
    for (const auto& block : pi.blocks()) term = term * SparsePoly::variable(static_cast<int>(block.size()) - 1);
    total += term;
  });
  return total;
}

UniPolyD excess_a1a2_p2() {
  const int cap = 4;
  const UniPolyD d = UniPolyD::variable();
  const P2Class l = P2Class::l(cap);
  const P2Class H = P2Class::H(cap);
  const P2Class one = P2Class::constant(UniPolyD(1), cap);
  const P2Class shifted_l = P2Class::constant(d - UniPolyD(1), cap) * l;
  const P2Class inv_tangent =
      one - P2Class::constant(UniPolyD(3), cap) * l + P2Class::constant(UniPolyD(6), cap) * l.pow(2);
  const P2Class cusp_normal = P2Class::constant(UniPolyD(2) * (d - UniPolyD(3)), cap) * l +
                              P2Class::constant(UniPolyD(2), cap) * H;
  const P2Class product = (one + shifted_l + H).pow(3) * inv_tangent * cusp_normal * (shifted_l + H).pow(3);
  return product.coefficient(2, 3);
}

}  // namespace nodal
