#pragma once

// First-principles dimensions for the group algebra kS_n, independent of any
// generating function.
//
// HH^1(kG) decomposes over conjugacy classes as the direct sum of H^1(C_G(g), k),
// and H^1(H, k) = Hom(H, k) has dimension dim Hom(H, F_p), the p-rank of the
// abelianization. A permutation of cycle type 1^{m_1} 2^{m_2} ... has
// centralizer prod_a C_a wr S_{m_a}. For the wreath product,
//
//   (C_a wr S_m)^ab = C_a x S_m^ab,
//
// since conjugating by S_m identifies the m copies of C_a modulo commutators,
// and S_m^ab is C_2 for m >= 2 and trivial otherwise. Hence
//
//   dim Hom(C_G(g), F_p) = sum_a ([p | a] + [p = 2 and m_a >= 2]).

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "blockhh/partitions.hpp"

namespace blockhh {

/// Cycle length -> number of cycles of that length.
class CycleType {
 public:
  CycleType() = default;
  /// Throws std::invalid_argument on a zero length or zero count.
  explicit CycleType(std::map<std::uint32_t, std::uint32_t> multiplicities);
  static CycleType from_partition(const Partition& lambda);

  const std::map<std::uint32_t, std::uint32_t>& multiplicities() const noexcept { return mult_; }
  std::uint64_t degree() const;
  Partition to_partition() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::map<std::uint32_t, std::uint32_t> mult_;
};

std::uint32_t hom_to_Fp_dim(std::uint32_t p, const CycleType& cycle_type);

/// dim HH^1(kS_n), summed over cycle types.
std::uint64_t hh1_group_oracle(std::uint32_t p, std::uint32_t n);

/// dim Z(kS_n): the number of conjugacy classes.
std::uint64_t dim_center_oracle(std::uint32_t n);

}  // namespace blockhh
