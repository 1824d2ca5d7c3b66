#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "blockhh/series.hpp"

namespace blockhh {

/// Dense univariate polynomial over Q. Trailing zero coefficients are always
/// trimmed, so the zero polynomial has no stored coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  static Polynomial from_integers(std::initializer_list<long> values);
  static Polynomial monomial(const mpq_class& coeff, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^i; zero past the degree.
  mpq_class coefficient(std::size_t i) const;
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  const mpq_class& leading() const { return coeffs_.back(); }

  /// Rendering in the variable t, e.g. "1-t-t^2", "(1/2)t^3".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<mpq_class> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const mpq_class& scalar, const Polynomial& a);

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// The s-th m-section: coefficient i of the result is coefficient m*i+s of a,
/// so that a(t) = sum_s section(a, m, s)(t^m) * t^s.
Polynomial section(const Polynomial& a, std::size_t m, std::size_t s);

/// a(t) -> a(t^m).
Polynomial substitute_power(const Polynomial& a, std::size_t m);

/// The polynomial read as a series known to `order`.
Series to_series(const Polynomial& a, std::size_t order);

}  // namespace blockhh
