#pragma once

// The tabulated node linear forms a_1..a_15, loaded from data/a_forms.json.

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "nodal/chow.hpp"
#include "nodal/exact.hpp"

namespace nodal {

inline constexpr int kMaxNodeIndex = 15;

/// Directory holding the JSON data assets: $NODAL_ATLAS_DATA if set, else the
/// directory configured at build time.
std::filesystem::path data_directory();

/// a_i = (-1)^{i-1} (i-1)! (D ∂ + E k + F s + G x).
struct NodeLinearForm {
  int index = 0;
  BigInt D, E, F, G;

  /// The coefficients of a_i itself.
  LinearForm a() const;
  /// a_i / (i-1)!.
  LinearForm a_tilde() const;
  BigInt evaluate(const ChernNumbers& c) const;
};

/// One printed row pair: the a_i row and the a_i / (i-1)! row, each as
/// (∂, k, s, x) coefficients.
struct ATableRow {
  int index = 0;
  std::array<BigInt, 4> a;
  std::array<BigInt, 4> a_tilde;
};

struct TildeMismatch {
  int index;
  int column;  // 0..3 for ∂, k, s, x
  BigInt printed;
  BigInt expected;
};

class ATable {
public:
  /// Parses the JSON asset; derives D..G from the a_i rows and throws
  /// consistency_error if (i-1)! does not divide them.
  static ATable load(const std::filesystem::path& file);
  static ATable from_json_text(const std::string& text);
  /// Shared instance loaded from data_directory() on first use.
  static const ATable& standard();

  int size() const { return static_cast<int>(forms_.size()); }
  /// Throws std::out_of_range for i < 1 or i > size().
  const NodeLinearForm& form(int i) const;
  const std::vector<ATableRow>& rows() const { return rows_; }

  /// Cells where the printed a_i / (i-1)! row differs from the exact quotient.
  std::vector<TildeMismatch> tilde_mismatches() const;

private:
  std::vector<ATableRow> rows_;
  std::vector<NodeLinearForm> forms_;
};

}  // namespace nodal
