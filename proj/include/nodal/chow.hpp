#pragma once

// Truncated intersection-ring arithmetic on F = S x Y, Y = |L| = P^N.
//
// General surface: monomials in L, K (first Chern classes of L and K_S),
// x = c_2(S) and the hyperplane class H of Y. L, K, H have weight 1 and x
// weight 2. Anything of surface degree > 2 vanishes because dim S = 2, and
// powers of H above the configured cap are dropped.
//
// Plane specialization: S = P^2, L = O(d); monomials in the line class l
// (l^3 = 0) and H with coefficients polynomial in d.

#include <compare>
#include <map>
#include <string>

#include "nodal/bell.hpp"
#include "nodal/exact.hpp"
#include "nodal/partitions.hpp"

namespace nodal {

inline constexpr int kDefaultHCap = 16;
inline constexpr int kMaxQIndex = 8;

/// (∂, k, s, x) = (L^2, L.K_S, K_S^2, c_2(S)) of a polarized surface.
struct ChernNumbers {
  BigInt d, k, s, x;
  friend bool operator==(const ChernNumbers&, const ChernNumbers&) = default;
};

/// (d^2, -3d, 9, 3) for (P^2, O(d)).
ChernNumbers p2_chern(long degree);

/// c_∂ ∂ + c_k k + c_s s + c_x x.
struct LinearForm {
  Rational d, k, s, x;

  Rational evaluate(const ChernNumbers& c) const;
  /// Substitutes the plane Chern numbers, leaving a polynomial in d.
  UniPolyD specialize_p2() const;

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator*(const Rational& c, const LinearForm& f);
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  std::string to_string() const;
};

struct ChowMonomial {
  int L = 0, K = 0, x = 0, H = 0;

  int surface_degree() const { return L + K + 2 * x; }
  int graded_degree() const { return surface_degree() + H; }
  /// "L^2*H^3"; "1" for the unit monomial.
  std::string to_string() const;
  friend auto operator<=>(const ChowMonomial&, const ChowMonomial&) = default;
};

class GradedClass {
public:
  using Terms = std::map<ChowMonomial, Rational>;

  explicit GradedClass(int h_cap = kDefaultHCap) : cap_(h_cap) {}
  static GradedClass constant(const Rational& c, int h_cap = kDefaultHCap);
  static GradedClass monomial(ChowMonomial m, const Rational& c = Rational(1), int h_cap = kDefaultHCap);
  static GradedClass L(int h_cap = kDefaultHCap) { return monomial({1, 0, 0, 0}, 1, h_cap); }
  static GradedClass K(int h_cap = kDefaultHCap) { return monomial({0, 1, 0, 0}, 1, h_cap); }
  static GradedClass x(int h_cap = kDefaultHCap) { return monomial({0, 0, 1, 0}, 1, h_cap); }
  static GradedClass H(int h_cap = kDefaultHCap) { return monomial({0, 0, 0, 1}, 1, h_cap); }

  int h_cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ChowMonomial& m) const;
  /// Homogeneous part of the given weighted degree.
  GradedClass degree_part(int degree) const;

  GradedClass pow(unsigned e) const;
  /// Multiplicative inverse; requires a non-zero constant term.
  GradedClass inverse() const;

  friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const Rational& c, const GradedClass& a);
  friend bool operator==(const GradedClass& a, const GradedClass& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  void add(const ChowMonomial& m, const Rational& c);
  int cap_;
  Terms terms_;
};

/// xi = (L+H)^3 + K(L+H)^2 + x(L+H), the class of the critical locus X.
GradedClass critical_class(int h_cap = kDefaultHCap);
/// c(P^1) = [(1+L+H)^2 + (1+L+H)K + x](1+L+H).
GradedClass chern_principal_parts(int h_cap = kDefaultHCap);
/// c(T_S) = 1 - K + x.
GradedClass tangent_chern(int h_cap = kDefaultHCap);
/// c(T_S)^{-1} = 1 + K + (K^2 - x).
GradedClass inverse_tangent_chern(int h_cap = kDefaultHCap);

/// Coefficient of H^n restricted to surface degree 2, read as
/// L^2 -> ∂, LK -> k, K^2 -> s, x -> x.
LinearForm pushforward_to_Y(const GradedClass& c, int n);

/// M_r = c(N_X F)^{r-1} c(T_S)^{-(r-1)} ∩ [X] on a general surface.
GradedClass m_class_general(int r, int h_cap = kDefaultHCap);
/// Small-diagonal equivalence term Q_n, 1 <= n <= 8.
LinearForm q_general(int n);
/// Correction term C_n for n <= 4 on a general surface (C_1 = C_2 = 0).
LinearForm c_correction_general(int n);

// --- P^2 ---------------------------------------------------------------------

struct P2Monomial {
  int l = 0, H = 0;
  std::string to_string() const;
  friend auto operator<=>(const P2Monomial&, const P2Monomial&) = default;
};

class P2Class {
public:
  using Terms = std::map<P2Monomial, UniPolyD>;

  explicit P2Class(int h_cap = kDefaultHCap) : cap_(h_cap) {}
  static P2Class constant(const UniPolyD& c, int h_cap = kDefaultHCap);
  static P2Class l(int h_cap = kDefaultHCap);
  static P2Class H(int h_cap = kDefaultHCap);

  int h_cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  UniPolyD coefficient(int l_exp, int h_exp) const;
  P2Class pow(unsigned e) const;

  friend P2Class operator+(const P2Class& a, const P2Class& b);
  friend P2Class operator-(const P2Class& a, const P2Class& b);
  friend P2Class operator*(const P2Class& a, const P2Class& b);
  friend bool operator==(const P2Class& a, const P2Class& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  void add(const P2Monomial& m, const UniPolyD& c);
  int cap_;
  Terms terms_;
};

/// M_n(l, H, d) = (1 + H + (d-1)l)^{3(n-1)} (1 - 3l + 6l^2)^{n-1} (H + (d-1)l)^3.
P2Class m_poly_p2(int n, int h_cap = kDefaultHCap);
/// Q_n for the plane as the coefficient of l^2 H^n in M_n.
UniPolyD q_p2_extraction(int n);
/// Q_n = f_n d^2 + g_n d + h_n from the closed binomial formulas.
UniPolyD q_p2_closed(int n);
/// Same formulas with the printed constant (25/2 n^2 - 29/2 + 3) in h_n;
/// kept to show that reading disagrees with the tabulated Q_3, Q_4.
UniPolyD q_p2_closed_literal(int n);
/// C_n for the plane, n <= 4.
UniPolyD c_correction_p2(int n);

/// Degree of f_* m_r for (P^2, O(d)), 1 <= r <= 4:
/// P_r(Q_1+C_1, -(Q_2+C_2), 2(Q_3+C_3), -6(Q_4+C_4)).
BigInt multiple_point_degree(int r, long degree);

/// Q_pi = prod_i Q_i^{s_i(pi)} at the given surface.
BigInt equivalence_polydiagonal(const SetPartition& pi, const ChernNumbers& chern);

/// Inclusion-exclusion guess for the total diagonal equivalence,
/// -sum_{pi != 0^} mu(0^, pi) prod_{B in pi} Q_{|B|}, as a polynomial in
/// the symbols Q_1..Q_r (variable i-1 is Q_i).
SparsePoly inclusion_exclusion_equivalence(int r);

/// Equivalence of the cusp diagonal for [C].[X] on the plane, the coefficient
/// of l^2 H^3 in (1+(d-1)l+H)^3 (1-3l+6l^2) (2(d-3)l+2H) ((d-1)l+H)^3.
UniPolyD excess_a1a2_p2();

}  // namespace nodal
