#pragma once

// Integer partitions and the abacus: beta-sets, p-cores, p-quotients and the
// counting functions built on them.
//
// Abacus convention. A partition with beta-set B of length L (L a multiple of
// p) is drawn on p runners; the bead for beta value b sits on runner b mod p
// at row b / p. The p-core slides every bead to the top of its runner. The
// i-th quotient component is the partition whose beta-set is the list of bead
// rows on runner i. Changing L by a multiple of p leaves both unchanged.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace blockhh {

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<std::uint32_t> parts);

  std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Comma-joined parts; the empty partition renders as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t size_ = 0;
};

struct CoreQuotient {
  std::uint32_t p = 0;
  Partition core;
  std::vector<Partition> quotient;  // exactly p components

  std::uint64_t weight() const;
  friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(std::uint32_t n);

/// {lambda_i + length - i : i = 1..length}, strictly decreasing.
/// Throws std::invalid_argument if length < number of parts.
std::vector<std::uint64_t> beta_set(const Partition& lambda, std::size_t length);

/// Inverse of beta_set for any finite set of distinct nonnegative integers
/// (in any order).
Partition partition_from_beta(std::span<const std::uint64_t> beta);

bool is_p_core(const Partition& lambda, std::uint32_t p);
Partition p_core(const Partition& lambda, std::uint32_t p);
CoreQuotient p_quotient(const Partition& lambda, std::uint32_t p);

/// Inverse of p_quotient. Throws std::invalid_argument if the core is not a
/// p-core or the quotient does not have p components.
Partition from_core_quotient(const CoreQuotient& cq);

/// Every p-core of size n, in reverse lexicographic order. Generated from
/// abacus charge vectors rather than by filtering all partitions of n.
std::vector<Partition> p_cores_of_size(std::uint32_t n, std::uint32_t p);

/// c(n): the number of p-core partitions of n.
std::uint64_t count_pcores(std::uint32_t n, std::uint32_t p);

/// p(n).
mpz_class partition_count(std::uint32_t n);

/// Entry w is the number of p-tuples of partitions of total size w, w <= max_weight.
std::vector<mpz_class> multipartition_counts(std::uint32_t p, std::uint32_t max_weight);

/// rho(n, core): the number of partitions of n whose p-core is `core`.
/// Zero unless n >= |core| and n = |core| mod p. Counted through the
/// core/quotient bijection. Throws std::invalid_argument if core is not a p-core.
mpz_class rho(std::uint32_t n, const Partition& core, std::uint32_t p);

}  // namespace blockhh
