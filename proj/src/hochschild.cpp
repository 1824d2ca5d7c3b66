#include "blockhh/hochschild.hpp"

#include <algorithm>
#include <stdexcept>

#include "blockhh/blocks.hpp"
#include "blockhh/partitions.hpp"
#include "blockhh/primes.hpp"

namespace blockhh {

namespace {

Series from_mpz(const std::vector<mpz_class>& v, std::size_t order) {
  std::vector<mpq_class> c(order);
  for (std::size_t i = 0; i < order; ++i) c[i] = v.at(i);
  return Series(std::move(c));
}

// t^shift * a(t^m), truncated to `order`.
Series stretch(const Series& a, std::size_t m, std::size_t shift, std::size_t order) {
  return shift_up(substitute_power(a, m), shift).truncated(order);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

std::optional<Discrepancy> first_difference(const Series& lhs, const Series& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  for (std::size_t i = 0; i < n; ++i)
    if (lhs[i] != rhs[i]) return Discrepancy{i, lhs[i], rhs[i]};
  return std::nullopt;
}

Series z_series(std::uint32_t p, std::size_t order) {
  require_prime(p);
  if (order == 0) return Series(0);
  Series z = from_mpz(multipartition_counts(p, static_cast<std::uint32_t>(order - 1)), order);
  if (z != power(partition_gf(order), p)) throw std::logic_error("Z(t) disagrees with P(t)^p");
  return z;
}

std::uint32_t y1_formula(std::uint32_t p, std::uint32_t r) {
  require_prime(p);
  if (r == 0) throw std::invalid_argument("y1_formula requires r >= 1");
  const std::uint32_t mod = 2 * (p - 1);
  const std::uint32_t rem = r % mod;
  return (rem == 0 || rem == mod - 1) ? 2 : 1;
}

RationalFunction phi_r1(std::uint32_t p) {
  require_prime(p);
  return RationalFunction(Polynomial::from_integers({p == 2 ? 2L : 1L}), Polynomial::from_integers({1, -1}));
}

Series hh1_block_series(std::uint32_t p, std::size_t order) {
  if (order == 0) return Series(0);
  const Series body = expand(phi_r1(p), order) * z_series(p, order);
  return shift_up(body, 1).truncated(order);
}

Series hh1_group_series(std::uint32_t p, std::size_t order) {
  require_prime(p);
  const Series partitions = partition_gf(order);
  // 2t^2/(1-t^2) for p = 2, t^p/(1-t^p) otherwise
  const RationalFunction closed(Polynomial::monomial(p == 2 ? 2 : 1, p),
                                Polynomial::from_integers({1}) - Polynomial::monomial(1, p));
  Series group = expand(closed, order) * partitions;
  const Series via_phi = stretch(expand(phi_r1(p), ceil_div(order, p) + 1), p, p, order) * partitions;
  if (group != via_phi) throw std::logic_error("closed form of the HH^1 group series disagrees with t^p phi(t^p) P(t)");
  return group;
}

VerificationReport verify_block_decomposition(std::uint32_t p, std::uint32_t s, std::size_t order,
                                              std::optional<std::size_t> fault) {
  require_prime(p);
  if (s >= p) throw std::invalid_argument("residue s must satisfy 0 <= s < p");
  const std::size_t sections = order / p + 1;
  Series cs = section(pcore_count_gf(p, sections * p + s), p, s);
  if (fault && *fault < cs.order()) cs = cs.bumped(*fault, 1);
  return verify_block_decomposition(p, s, order, cs);
}

VerificationReport verify_block_decomposition(std::uint32_t p, std::uint32_t s, std::size_t order,
                                              const Series& cs) {
  require_prime(p);
  if (s >= p) throw std::invalid_argument("residue s must satisfy 0 <= s < p");
  if (order == 0) throw std::invalid_argument("order must be positive");
  const std::size_t sections = order / p + 1;
  if (cs.order() < sections) throw std::invalid_argument("C_s is not known to enough terms");

  VerificationReport report;
  report.identity = "eq12[s=" + std::to_string(s) + "]";
  report.p = p;
  report.order = order;

  // Left-hand sides: dim Z(kS_m) = p(m) and the group HH^1 dimensions,
  // restricted to m = s mod p.
  const Series partitions = partition_gf(order);
  const Series group = hh1_group_series(p, order);
  std::vector<mpq_class> lhs_center(order), lhs_hh1(order);
  for (std::size_t m = s; m < order; m += p) {
    lhs_center[m] = partitions[m];
    lhs_hh1[m] = group[m];
  }

  const Series cs_t = cs.truncated(sections);
  const Series rhs_center =
      shift_up(substitute_power(z_series(p, sections), p) * substitute_power(cs_t, p), s).truncated(order);
  const Series rhs_hh1 =
      shift_up(substitute_power(hh1_block_series(p, sections), p) * substitute_power(cs_t, p), s).truncated(order);

  if (auto d = first_difference(Series(std::move(lhs_center)), rhs_center)) {
    report.first_discrepancy = d;
    report.detail = "eq1: center";
    return report;
  }
  if (auto d = first_difference(Series(std::move(lhs_hh1)), rhs_hh1)) {
    report.first_discrepancy = d;
    report.detail = "eq2: HH1";
    return report;
  }
  return report;
}

VerificationReport verify_theorem3(std::uint32_t p, std::size_t order, std::optional<std::size_t> fault) {
  require_prime(p);
  const std::size_t min_order = std::max<std::size_t>(20, 2 * std::size_t{p} + 7);
  if (order < min_order)
    throw std::invalid_argument("the rationality check needs order >= " + std::to_string(min_order) + " for p = " +
                                std::to_string(p));
  const std::size_t bound = std::size_t{p} + 2;

  VerificationReport report;
  report.identity = "thm3";
  report.p = p;
  report.order = order;
  auto fail = [&](std::optional<Discrepancy> d, std::string what) {
    if (!d) throw std::logic_error("verify_theorem3: failed sub-check without a discrepancy: " + what);
    report.first_discrepancy = std::move(d);
    report.detail = std::move(what);
    return report;
  };

  const Series z = z_series(p, order);
  Series y = from_mpz(dim_hh1_by_weight(p, static_cast<std::uint32_t>(order - 1)), order);
  if (fault && *fault < order) y = y.bumped(*fault, 1);

  Series phi_series;
  try {
    phi_series = shift_down(y, 1) * inverse(z.truncated(order - 1));
  } catch (const std::domain_error&) {
    return fail(Discrepancy{0, y[0], 0}, "Y(t) divisible by t");
  }

  const auto fitted = rational_fit(phi_series, bound, bound);
  const std::uint32_t y1 = y1_formula(p, 1);
  if (phi_series[0] != y1) return fail(Discrepancy{0, phi_series[0], y1}, "phi(0) = y1");

  const RationalFunction closed = phi_r1(p);
  if (!fitted || *fitted != closed)
    return fail(first_difference(phi_series, expand(closed, phi_series.order())), "fitted phi = closed form");

  const Series phi = expand(*fitted, order);
  if (auto d = first_difference(y, shift_up(phi * z, 1).truncated(order))) return fail(d, "Y = t phi Z");

  const Series partitions = partition_gf(order);
  const Series group = hh1_group_series(p, order);
  const Series stretched = stretch(expand(*fitted, ceil_div(order, p) + 1), p, p, order);
  if (auto d = first_difference(group, stretched * partitions)) return fail(d, "HH1 group = t^p phi(t^p) P");

  // The group-level factor t^p phi(t^p), fitted on its own, must descend to t phi(t).
  const Series group_factor = group * inverse(partitions);
  std::optional<RationalFunction> descended;
  if (auto g = rational_fit(group_factor, bound, bound)) {
    try {
      descended = descend(*g, p);
    } catch (const std::domain_error&) {
    }
  }
  if (!descended) return fail(first_difference(group_factor, stretched), "descend(fit(group/P)) = t phi");
  const RationalFunction block_factor(Polynomial::monomial(1, 1) * fitted->numerator(), fitted->denominator());
  if (*descended != block_factor)
    return fail(first_difference(expand(*descended, order), shift_up(phi_series, 1)), "descend(fit(group/P)) = t phi");

  report.detail = "phi = " + fitted->to_string();
  return report;
}

VerificationReport verify_theorem2(std::uint32_t p, std::uint32_t max_weight, std::optional<std::size_t> fault) {
  require_prime(p);
  VerificationReport report;
  report.identity = "thm2";
  report.p = p;
  report.order = std::size_t{max_weight} + 1;

  const long factor = p == 2 ? 2 : 1;
  Series y = hh1_block_series(p, report.order);
  if (fault && *fault < y.order()) y = y.bumped(*fault, 1);

  mpz_class center_sum = 0;
  mpz_class rho_sum = 0;
  for (std::uint32_t w = 0; w <= max_weight; ++w) {
    const BlockDescriptor b = principal_block(p, w);
    const mpq_class value(dim_hh1(b));
    const std::pair<mpq_class, const char*> checks[] = {
        {mpq_class(factor * center_sum), "dim HH1 = c * sum dim Z(B_pj)"},
        {mpq_class(factor * rho_sum), "dim HH1 = c * sum rho(pj)"},
        {y[w], "dim HH1 = [t^w] Y(t)"},
    };
    for (const auto& [expected, what] : checks) {
      if (value != expected) {
        report.first_discrepancy = Discrepancy{w, value, expected};
        report.detail = what;
        return report;
      }
    }
    center_sum += dim_center(b);
    rho_sum += rho(p * w, Partition{}, p);
  }
  return report;
}

}  // namespace blockhh
