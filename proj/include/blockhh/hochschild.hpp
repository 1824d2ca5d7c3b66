#pragma once

// Generating functions for centers and first Hochschild cohomology of the
// principal blocks B_{pw} and of the group algebras kS_n, and the checks that
// tie them together:
//
//   Z(t) = sum_w dim Z(B_{pw}) t^w              (equals P(t)^p)
//   Y(t) = sum_w dim HH^1(B_{pw}) t^w = t phi(t) Z(t)
//   sum_n dim HH^1(kS_n) t^n = t^p phi(t^p) P(t)
//
// and, for each residue s mod p, the block decompositions
//
//   sum_n dim Z(kS_{pn+s}) t^{pn+s}     = t^s Z(t^p) C_s(t^p)
//   sum_n dim HH^1(kS_{pn+s}) t^{pn+s}  = t^s Y(t^p) C_s(t^p)
//
// where C_s collects the p-core counts c(pn+s).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "blockhh/rational.hpp"
#include "blockhh/series.hpp"

namespace blockhh {

struct Discrepancy {
  std::size_t exponent = 0;
  mpq_class lhs;
  mpq_class rhs;
};

/// Outcome of one identity check. Only the first mismatching coefficient is
/// kept; `detail` names the sub-identity that failed, or carries a summary
/// (such as the fitted phi) when everything holds.
struct VerificationReport {
  std::string identity;
  std::uint32_t p = 0;
  std::size_t order = 0;
  std::optional<Discrepancy> first_discrepancy;
  std::string detail;

  bool holds() const noexcept { return !first_discrepancy.has_value(); }
};

/// First exponent below min(lhs.order(), rhs.order()) where the two differ.
std::optional<Discrepancy> first_difference(const Series& lhs, const Series& rhs);

/// Z(t); throws std::logic_error if it disagrees with P(t)^p.
Series z_series(std::uint32_t p, std::size_t order);

/// Constant coefficient of phi in degree r: 2 if r = 0 or -1 mod 2(p-1),
/// 1 otherwise.
std::uint32_t y1_formula(std::uint32_t p, std::uint32_t r);

/// phi for degree one: 2/(1-t) when p = 2, 1/(1-t) otherwise.
RationalFunction phi_r1(std::uint32_t p);

/// Y(t) = t phi(t) Z(t) for degree one.
Series hh1_block_series(std::uint32_t p, std::size_t order);

/// sum_n dim HH^1(kS_n) t^n, from 2t^2/(1-t^2) P(t) (p = 2) or
/// t^p/(1-t^p) P(t). Throws std::logic_error if that closed form disagrees
/// with t^p phi(t^p) P(t).
Series hh1_group_series(std::uint32_t p, std::size_t order);

/// Checks both block decompositions for residue s to the given order in t.
/// With `fault`, coefficient `*fault` of C_s is bumped by one first.
VerificationReport verify_block_decomposition(std::uint32_t p, std::uint32_t s, std::size_t order,
                                              std::optional<std::size_t> fault = std::nullopt);

/// Same, using a caller-supplied C_s in place of the p-core counts.
VerificationReport verify_block_decomposition(std::uint32_t p, std::uint32_t s, std::size_t order,
                                              const Series& cs);

/// Degree-one rationality check. Y(t) is built from block dimensions, phi is
/// reconstructed by rational_fit from (Y(t)/t) Z(t)^{-1}, and then
///   phi(0) = y1_formula(p, 1),  phi = phi_r1(p),  Y = t phi Z,
///   HH^1 group series = t^p phi(t^p) P(t),
///   descend(fit(HH^1 group series / P), p) = t phi
/// are all checked. With `fault`, coefficient `*fault` of Y is bumped first.
/// Requires order >= max(20, 2p + 7).
VerificationReport verify_theorem3(std::uint32_t p, std::size_t order,
                                   std::optional<std::size_t> fault = std::nullopt);

/// For every weight w <= max_weight, compares dim HH^1 of the weight-w block
/// against c_p * sum_{j<w} dim Z(B_{pj}), c_p * sum_{j<w} rho(pj, empty) and
/// coefficient w of Y(t). With `fault`, coefficient `*fault` of Y is bumped.
VerificationReport verify_theorem2(std::uint32_t p, std::uint32_t max_weight,
                                   std::optional<std::size_t> fault = std::nullopt);

}  // namespace blockhh
