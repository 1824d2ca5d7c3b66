#include "blockhh/primes.hpp"

namespace blockhh {

not_prime_error::not_prime_error(std::uint64_t value)
    : std::invalid_argument("p = " + std::to_string(value) + " is not prime"), value_(value) {}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw not_prime_error(p);
}

}  // namespace blockhh
