#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockhh {

/// Thrown when an argument documented as a prime is not one.
class not_prime_error : public std::invalid_argument {
 public:
  explicit not_prime_error(std::uint64_t value);
  std::uint64_t value() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Throws not_prime_error unless p is prime.
void require_prime(std::uint64_t p);

}  // namespace blockhh
