#include "blockhh/oracle.hpp"

#include <stdexcept>

#include "blockhh/primes.hpp"

namespace blockhh {

CycleType::CycleType(std::map<std::uint32_t, std::uint32_t> multiplicities) : mult_(std::move(multiplicities)) {
  for (const auto& [length, count] : mult_)
    if (length == 0 || count == 0) throw std::invalid_argument("cycle lengths and counts must be positive");
}

CycleType CycleType::from_partition(const Partition& lambda) {
  std::map<std::uint32_t, std::uint32_t> m;
  for (std::uint32_t part : lambda.parts()) ++m[part];
  return CycleType(std::move(m));
}

std::uint64_t CycleType::degree() const {
  std::uint64_t n = 0;
  for (const auto& [length, count] : mult_) n += std::uint64_t{length} * count;
  return n;
}

Partition CycleType::to_partition() const {
  std::vector<std::uint32_t> parts;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) parts.insert(parts.end(), it->second, it->first);
  return Partition(std::move(parts));
}

std::uint32_t hom_to_Fp_dim(std::uint32_t p, const CycleType& cycle_type) {
  require_prime(p);
  std::uint32_t dim = 0;
  for (const auto& [length, count] : cycle_type.multiplicities()) {
    if (length % p == 0) ++dim;
    if (p == 2 && count >= 2) ++dim;
  }
  return dim;
}

std::uint64_t hh1_group_oracle(std::uint32_t p, std::uint32_t n) {
  require_prime(p);
  std::uint64_t total = 0;
  for (const auto& lambda : partitions_of(n)) total += hom_to_Fp_dim(p, CycleType::from_partition(lambda));
  return total;
}

std::uint64_t dim_center_oracle(std::uint32_t n) { return partitions_of(n).size(); }

}  // namespace blockhh
