#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A Series of order N stores the coefficients of t^0 .. t^{N-1}; it is known
// modulo t^N. Binary arithmetic truncates to the smaller operand order, so an
// identity checked between two results holds exactly to the order they carry.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace blockhh {

class Series {
 public:
  Series() = default;

  /// The zero series known to the given order.
  explicit Series(std::size_t order) : coeffs_(order) {}

  explicit Series(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Integer coefficients; the order is the number of values supplied.
  static Series from_integers(std::initializer_list<long> values);

  /// Polynomial-style construction: `values` padded with zeros up to `order`.
  static Series from_integers(std::initializer_list<long> values, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const mpq_class& operator[](std::size_t exponent) const { return coeffs_.at(exponent); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  /// Same series known to a smaller order. Throws if new_order > order().
  Series truncated(std::size_t new_order) const;

  /// Copy with `delta` added to one coefficient.
  Series bumped(std::size_t exponent, const mpq_class& delta) const;

  /// Human-readable rendering, e.g. "1 + 2*t^2 + O(t^3)".
  std::string to_string() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<mpq_class> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const mpq_class& scalar, const Series& a);

/// Multiplicative inverse of a unit series. Throws std::domain_error when the
/// constant coefficient is zero.
Series inverse(const Series& a);

/// a^k by repeated squaring; a^0 is 1 to a.order().
Series power(const Series& a, unsigned k);

/// Multiplication by t^k. The order grows by k.
Series shift_up(const Series& a, std::size_t k);

/// Division by t^k. Throws std::domain_error if any of the coefficients of
/// t^0 .. t^{k-1} is nonzero or if a.order() < k.
Series shift_down(const Series& a, std::size_t k);

/// h(t) -> h(t^m). The order becomes m * a.order().
Series substitute_power(const Series& a, std::size_t m);

/// The s-th m-section: coefficient n of the result is coefficient m*n+s of a.
/// Order is ceil((a.order() - s) / m), or 0 when s >= a.order().
Series section(const Series& a, std::size_t m, std::size_t s);

/// P(t) = prod_{n>=1} 1/(1 - t^n), whose coefficients count partitions.
Series partition_gf(std::size_t order);

/// Generating function of p-core partitions, via the product
/// prod_{n>=1} (1 - t^{pn})^p / (1 - t^n).
Series pcore_count_gf(std::uint32_t p, std::size_t order);

}  // namespace blockhh
