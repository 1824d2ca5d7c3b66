#include "blockhh/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "blockhh/primes.hpp"

namespace blockhh {

Series Series::from_integers(std::initializer_list<long> values) {
  return from_integers(values, values.size());
}

Series Series::from_integers(std::initializer_list<long> values, std::size_t order) {
  if (values.size() > order) throw std::invalid_argument("more coefficients than the stated order");
  std::vector<mpq_class> coeffs(order);
  std::size_t i = 0;
  for (long v : values) coeffs[i++] = v;
  return Series(std::move(coeffs));
}

Series Series::truncated(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("cannot truncate a series to a larger order");
  return Series(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + new_order));
}

Series Series::bumped(std::size_t exponent, const mpq_class& delta) const {
  auto coeffs = coeffs_;
  coeffs.at(exponent) += delta;
  return Series(std::move(coeffs));
}

std::string Series::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) out << " + ";
    out << coeffs_[i].get_str();
    if (i == 1) out << "*t";
    if (i > 1) out << "*t^" << i;
    first = false;
  }
  if (first) out << "0";
  out << " + O(t^" << coeffs_.size() << ")";
  return out.str();
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a) {
  std::vector<mpq_class> c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) c[i] = -a[i];
  return Series(std::move(c));
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(n);
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += x[i] * y[j];
  }
  return Series(std::move(c));
}

Series operator*(const mpq_class& scalar, const Series& a) {
  std::vector<mpq_class> c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) c[i] = scalar * a[i];
  return Series(std::move(c));
}

Series inverse(const Series& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  if (sgn(a[0]) == 0) throw std::domain_error("series with zero constant term is not invertible");
  const auto& x = a.coefficients();
  const mpq_class inv0 = 1 / x[0];
  std::vector<mpq_class> b(n);
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += x[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return Series(std::move(b));
}

Series power(const Series& a, unsigned k) {
  Series result = Series::from_integers({a.order() > 0 ? 1L : 0L}, a.order());
  Series base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Series shift_up(const Series& a, std::size_t k) {
  std::vector<mpq_class> c(a.order() + k);
  std::copy(a.coefficients().begin(), a.coefficients().end(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return Series(std::move(c));
}

Series shift_down(const Series& a, std::size_t k) {
  if (a.order() < k) throw std::domain_error("series is not known to enough terms to divide by t^k");
  for (std::size_t i = 0; i < k; ++i)
    if (sgn(a[i]) != 0)
      throw std::domain_error("series is not divisible by t^" + std::to_string(k) + ": coefficient of t^" +
                              std::to_string(i) + " is " + a[i].get_str());
  return Series(std::vector<mpq_class>(a.coefficients().begin() + static_cast<std::ptrdiff_t>(k),
                                       a.coefficients().end()));
}

Series substitute_power(const Series& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power requires m >= 1");
  std::vector<mpq_class> c(a.order() * m);
  for (std::size_t i = 0; i < a.order(); ++i) c[i * m] = a[i];
  return Series(std::move(c));
}

Series section(const Series& a, std::size_t m, std::size_t s) {
  if (m == 0 || s >= m) throw std::invalid_argument("section requires 0 <= s < m");
  if (s >= a.order()) return Series(0);
  const std::size_t n = (a.order() - s + m - 1) / m;
  std::vector<mpq_class> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[m * i + s];
  return Series(std::move(c));
}

namespace {

std::vector<mpz_class> partition_counts(std::size_t order) {
  std::vector<mpz_class> c(order);
  if (order == 0) return c;
  c[0] = 1;
  // multiply by 1/(1 - t^n) for each n
  for (std::size_t n = 1; n < order; ++n)
    for (std::size_t k = n; k < order; ++k) c[k] += c[k - n];
  return c;
}

Series from_mpz(const std::vector<mpz_class>& c) {
  std::vector<mpq_class> q(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) q[i] = c[i];
  return Series(std::move(q));
}

}  // namespace

Series partition_gf(std::size_t order) { return from_mpz(partition_counts(order)); }

Series pcore_count_gf(std::uint32_t p, std::size_t order) {
  require_prime(p);
  auto c = partition_counts(order);
  for (std::size_t step = p; step < order; step += p) {
    for (std::uint32_t rep = 0; rep < p; ++rep)
      for (std::size_t k = order; k-- > step;) c[k] -= c[k - step];
  }
  return from_mpz(c);
}

}  // namespace blockhh
