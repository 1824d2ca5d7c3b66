#pragma once

// Rational functions num(t)/den(t) over Q, their power-series expansions,
// Padé-style reconstruction from a series prefix, and descent along t -> t^m.

#include <cstddef>
#include <optional>
#include <string>

#include "blockhh/polynomial.hpp"
#include "blockhh/series.hpp"

namespace blockhh {

/// A quotient of polynomials held in canonical form: num and den are coprime,
/// and den is scaled so that den(0) = 1 when den(0) != 0, otherwise so that
/// den is monic. A zero function is stored as 0/1. Two canonical values are
/// equal iff they are equal as rational functions.
class RationalFunction {
 public:
  /// Throws std::invalid_argument if den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::from_integers({1})) {}

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  /// True when the function is a power series at 0, i.e. den(0) != 0.
  bool has_expansion_at_zero() const { return sgn(den_.coefficient(0)) != 0; }

  /// e.g. "2/(1-t)", "t^3/(1-t^3)".
  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Equality by cross-multiplication; agrees with == on canonical values.
bool equivalent(const RationalFunction& f, const RationalFunction& g);

/// The power series of f to the given order. Throws std::domain_error when
/// den(0) = 0.
Series expand(const RationalFunction& f, std::size_t order);

/// f(t) -> f(t^m).
RationalFunction substitute_power(const RationalFunction& f, std::size_t m);

/// Finds num/den with deg num <= max_num_deg, deg den <= max_den_deg and
/// den(0) = 1 whose expansion reproduces every coefficient of s, or nullopt if
/// none exists. Throws std::invalid_argument when
/// s.order() < max_num_deg + max_den_deg + 2.
std::optional<RationalFunction> rational_fit(const Series& s, std::size_t max_num_deg, std::size_t max_den_deg);

/// Given f = h(t^m), returns h in canonical form.
///
/// Writing num(t) = sum_s a_s(t^m) t^s and den(t) = sum_s b_s(t^m) t^s, the
/// equality num = den * h(t^m) splits section by section into a_s = b_s * h.
/// The smallest s with b_s != 0 determines h = a_s / b_s, and every other
/// section must satisfy a_r * b_s = a_s * b_r. Throws std::domain_error if f
/// has no expansion at 0 or is not a function of t^m.
RationalFunction descend(const RationalFunction& f, std::size_t m);

}  // namespace blockhh
