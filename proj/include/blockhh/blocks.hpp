#pragma once

// Blocks of the symmetric group algebra kS_n in characteristic p.
//
// Blocks are labelled by p-cores: the irreducible characters of S_n indexed
// by lambda and mu lie in the same block iff lambda and mu have equal p-cores.
// A block with core kappa of S_n has weight w = (n - |kappa|) / p and its
// defect groups are the Sylow p-subgroups of S_{pw}.
//
// The dimension of the center of a block is taken to be the number of
// irreducible characters in it, rho(n, kappa). For the principal blocks
// B_{pw} this is rho(pw, empty); for other blocks it agrees with the value
// for B_{pw} because blocks of equal weight are derived equivalent.

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "blockhh/partitions.hpp"

namespace blockhh {

struct BlockDescriptor {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  Partition core;
  std::uint32_t weight = 0;
  std::uint64_t defect_order_exp = 0;  // |defect group| = p^defect_order_exp

  friend bool operator==(const BlockDescriptor&, const BlockDescriptor&) = default;
};

/// nu_p(m!), by Legendre's formula.
std::uint64_t sylow_exponent(std::uint32_t p, std::uint64_t m);

/// The block of kS_{|core| + p*weight} with the given core. Throws
/// std::invalid_argument if core is not a p-core.
BlockDescriptor make_block(std::uint32_t p, const Partition& core, std::uint32_t weight);

/// B_{pw}: empty core, n = p*w.
BlockDescriptor principal_block(std::uint32_t p, std::uint32_t weight);

/// All blocks of kS_n, ordered by weight and then by core in reverse
/// lexicographic order.
std::vector<BlockDescriptor> blocks_of(std::uint32_t p, std::uint32_t n);

BlockDescriptor block_of_partition(const Partition& lambda, std::uint32_t p);

mpz_class dim_center(const BlockDescriptor& b);

/// dim HH^1(B) = c_p * sum_{j < w} rho(pj, empty), with c_2 = 2 and c_p = 1
/// for odd p.
mpz_class dim_hh1(const BlockDescriptor& b);

/// dim HH^1 for every weight 0..max_weight in one pass.
std::vector<mpz_class> dim_hh1_by_weight(std::uint32_t p, std::uint32_t max_weight);

}  // namespace blockhh
