#pragma once

// Thom polynomials S_alpha of multisingularities (codim <= 4) and the
// counting formula
//
//   N_alpha = 1/#Aut(alpha) sum_{J_1 u ... u J_l = [r]} prod_i S_{alpha_{J_i}}
//
// summed over unordered set partitions of the label positions.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/chow.hpp"
#include "nodal/exact.hpp"

namespace nodal {

enum class SingularityLabel { A1, A2, A3, A4, D4 };

int label_codim(SingularityLabel l);
std::string label_name(SingularityLabel l);

/// Multiset of singularity labels, kept sorted.
class MultisingularityType {
public:
  MultisingularityType() = default;
  explicit MultisingularityType(std::vector<SingularityLabel> labels);
  /// "A1^2*A2", "A1*A1*A2", "A3" ... Throws std::invalid_argument.
  static MultisingularityType parse(std::string_view text);

  const std::vector<SingularityLabel>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int codim() const;
  BigInt aut_order() const;
  /// Canonical key, e.g. "A1^2*A2".
  std::string to_string() const;

  MultisingularityType sub(const std::vector<int>& positions) const;

  friend auto operator<=>(const MultisingularityType&, const MultisingularityType&) = default;

private:
  std::vector<SingularityLabel> labels_;
};

class KazarianTable {
public:
  static KazarianTable load(const std::filesystem::path& file);
  static KazarianTable from_json_text(const std::string& text);
  static const KazarianTable& standard();

  /// Throws std::out_of_range when alpha is not tabulated.
  const LinearForm& s_alpha(const MultisingularityType& alpha) const;
  bool contains(const MultisingularityType& alpha) const { return rows_.count(alpha) != 0; }
  const std::map<MultisingularityType, LinearForm>& rows() const { return rows_; }

private:
  std::map<MultisingularityType, LinearForm> rows_;
};

/// N_alpha evaluated at the given Chern numbers.
Rational count_multisingular(const MultisingularityType& alpha, const ChernNumbers& chern,
                             const KazarianTable& table = KazarianTable::standard());

/// Types of codimension exactly i other than A1^i, sorted.
std::vector<MultisingularityType> gamma_types(int i);

}  // namespace nodal
