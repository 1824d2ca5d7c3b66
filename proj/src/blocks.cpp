#include "blockhh/blocks.hpp"

#include <stdexcept>

#include "blockhh/primes.hpp"

namespace blockhh {

std::uint64_t sylow_exponent(std::uint32_t p, std::uint64_t m) {
  require_prime(p);
  std::uint64_t e = 0;
  for (std::uint64_t q = m / p; q > 0; q /= p) e += q;
  return e;
}

BlockDescriptor make_block(std::uint32_t p, const Partition& core, std::uint32_t weight) {
  require_prime(p);
  if (!is_p_core(core, p)) throw std::invalid_argument("(" + core.to_string() + ") is not a p-core");
  BlockDescriptor b;
  b.p = p;
  b.n = static_cast<std::uint32_t>(core.size() + std::uint64_t{p} * weight);
  b.core = core;
  b.weight = weight;
  b.defect_order_exp = sylow_exponent(p, std::uint64_t{p} * weight);
  return b;
}

BlockDescriptor principal_block(std::uint32_t p, std::uint32_t weight) { return make_block(p, Partition{}, weight); }

std::vector<BlockDescriptor> blocks_of(std::uint32_t p, std::uint32_t n) {
  require_prime(p);
  std::vector<BlockDescriptor> out;
  for (std::uint32_t w = 0; std::uint64_t{p} * w <= n; ++w)
    for (const auto& core : p_cores_of_size(n - p * w, p)) out.push_back(make_block(p, core, w));
  return out;
}

BlockDescriptor block_of_partition(const Partition& lambda, std::uint32_t p) {
  Partition core = p_core(lambda, p);
  const auto weight = static_cast<std::uint32_t>((lambda.size() - core.size()) / p);
  return make_block(p, core, weight);
}

mpz_class dim_center(const BlockDescriptor& b) { return rho(b.n, b.core, b.p); }

std::vector<mpz_class> dim_hh1_by_weight(std::uint32_t p, std::uint32_t max_weight) {
  const auto z = multipartition_counts(p, max_weight);
  const long factor = p == 2 ? 2 : 1;
  std::vector<mpz_class> out(max_weight + 1);
  mpz_class partial = 0;
  for (std::uint32_t w = 0; w <= max_weight; ++w) {
    out[w] = factor * partial;
    partial += z[w];
  }
  return out;
}

mpz_class dim_hh1(const BlockDescriptor& b) { return dim_hh1_by_weight(b.p, b.weight)[b.weight]; }

}  // namespace blockhh
