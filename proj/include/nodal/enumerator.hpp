#pragma once

// Node counts N_r(S, L) = P_r(a_1, ..., a_r) / r!, the symbolic node
// polynomials, plane Severi degrees, the ratio table of successive D..G
// coefficients and the decomposition of a_i into equivalence, correction
// and multisingularity terms.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nodal/atable.hpp"
#include "nodal/bell.hpp"
#include "nodal/chow.hpp"
#include "nodal/exact.hpp"
#include "nodal/kazarian.hpp"

namespace nodal {

/// a_i from the standard table; throws std::out_of_range outside 1..15.
const NodeLinearForm& a_form(int i);

/// Throws std::out_of_range unless 0 <= r <= table size, consistency_error
/// if P_r(a)/r! is not an integer.
BigInt node_count(int r, const ChernNumbers& chern, const ATable& table = ATable::standard());

/// Same number from the sum over all set partitions of [r] of prod a_{|B|};
/// slow, used as a reference for small r.
BigInt node_count_partition_sum(int r, const ChernNumbers& chern, const ATable& table = ATable::standard());

/// Z_r in the variables (∂, k, s, x) = (x1, x2, x3, x4).
SparsePoly node_polynomial(int r, const ATable& table = ATable::standard());
inline const std::vector<std::string>& chern_variable_names() {
  static const std::vector<std::string> names{"∂", "k", "s", "x"};
  return names;
}

struct SeveriDegree {
  BigInt value;
  /// False when r > 2d - 2, where the count is only virtual.
  bool within_validity = true;
};
SeveriDegree severi_degree_p2(long degree, int r, const ATable& table = ATable::standard());

struct RatioRow {
  int n;
  /// D_{n+1}/D_n, E_{n+1}/E_n, F_{n+1}/F_n, G_{n+1}/G_n; empty when the denominator is 0.
  std::array<std::optional<Rational>, 4> ratio;
};
std::vector<RatioRow> ratio_table(const ATable& table = ATable::standard());
/// Round half away from zero to two decimals: 39/2 -> "19.50", 14 -> "14.00".
std::string render_two_decimals(const Rational& v);
inline constexpr const char* kUndefinedCell = "---";

struct DecompositionReport {
  int index;
  /// a_i read from the table, specialized to the plane.
  UniPolyD lhs_p2;
  /// (-1)^{i-1}(i-1)!(Q_i + C_i) - sum i!/#Aut S_alpha, plane.
  UniPolyD rhs_p2;
  /// Same two sides as linear forms in all four Chern numbers.
  LinearForm lhs_general;
  LinearForm rhs_general;
  bool holds_p2() const { return lhs_p2 == rhs_p2; }
  bool holds_general() const { return lhs_general == rhs_general; }
};
/// 2 <= i <= 4; throws std::out_of_range otherwise.
DecompositionReport a_decomposition_check(int i, const ATable& table = ATable::standard(),
                                          const KazarianTable& kaz = KazarianTable::standard());

}  // namespace nodal
