#pragma once

// Set partitions of [r] = {1, ..., r}, their block signatures and the Möbius
// coefficients of the partition lattice.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/exact.hpp"

namespace nodal {

inline constexpr int kDefaultPartitionCap = 12;

/// Block-size counts: counts[i - 1] is the number of blocks of size i.
struct Signature {
  std::vector<int> counts;

  int ground_size() const;  // sum of i * s_i
  int block_count() const;  // sum of s_i
  int of_size(int i) const {
    return (i >= 1 && i <= static_cast<int>(counts.size())) ? counts[static_cast<std::size_t>(i - 1)] : 0;
  }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Normalizes away trailing zero counts.
Signature make_signature(std::vector<int> counts);

class SetPartition {
public:
  /// Validates and canonicalizes: elements sorted within blocks, blocks
  /// ordered by least element. Throws std::invalid_argument.
  SetPartition(int r, std::vector<std::vector<int>> blocks);

  static SetPartition finest(int r);    // 1|2|...|r
  static SetPartition coarsest(int r);  // 12...r

  /// "12|345"; comma-separated elements ("1,2|3,...") are accepted and are
  /// emitted by to_string when r > 9.
  static SetPartition parse(std::string_view text);
  std::string to_string() const;

  int ground_size() const { return r_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  Signature signature() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
  int r_;
  std::vector<std::vector<int>> blocks_;
};

/// Calls visit once per partition of [r], in restricted-growth-string order.
void for_each_partition(int r, const std::function<void(const SetPartition&)>& visit,
                        int cap = kDefaultPartitionCap);
std::vector<SetPartition> enumerate_partitions(int r, int cap = kDefaultPartitionCap);

/// mu(0^, pi) = prod over blocks of (-1)^{|B|-1} (|B|-1)!.
BigInt mobius_coefficient(const SetPartition& pi);

/// Number of set partitions of [r] with the given signature.
/// Throws std::invalid_argument when sum i * s_i != r.
BigInt signature_count(int r, const Signature& sig);

/// Calls visit for every signature of r (integer partitions of r), in order of
/// decreasing block count.
void for_each_signature(int r, const std::function<void(const Signature&)>& visit);

/// Every block of finer lies in a block of coarser (equality allowed).
bool refines(const SetPartition& finer, const SetPartition& coarser);
bool strictly_refines(const SetPartition& finer, const SetPartition& coarser);

BigInt bell_number(int r);

}  // namespace nodal
