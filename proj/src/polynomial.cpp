#include "blockhh/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blockhh {

namespace {

void trim(std::vector<mpq_class>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Polynomial Polynomial::from_integers(std::initializer_list<long> values) {
  std::vector<mpq_class> c;
  c.reserve(values.size());
  for (long v : values) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(const mpq_class& coeff, std::size_t degree) {
  std::vector<mpq_class> c(degree + 1);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

mpq_class Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (sgn(c) < 0)
      out << "-";
    else if (!first)
      out << "+";
    const bool unit = (mag == 1);
    const bool integral = (mag.get_den() == 1);
    if (i == 0 || !unit) out << (integral ? mag.get_str() : "(" + mag.get_str() + ")");
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<mpq_class> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const mpq_class& scalar, const Polynomial& a) {
  std::vector<mpq_class> c(a.coefficients());
  for (auto& v : c) v *= scalar;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem(a.coefficients());
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<mpq_class> quot(rem.size() - db);
  const mpq_class& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class q = rem[k + db] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficients()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return mpq_class(1 / x.leading()) * x;
}

Polynomial section(const Polynomial& a, std::size_t m, std::size_t s) {
  if (m == 0 || s >= m) throw std::invalid_argument("section requires 0 <= s < m");
  std::vector<mpq_class> c;
  for (std::size_t i = s; i < a.coefficients().size(); i += m) c.push_back(a.coefficients()[i]);
  return Polynomial(std::move(c));
}

Polynomial substitute_power(const Polynomial& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power requires m >= 1");
  if (a.is_zero()) return a;
  std::vector<mpq_class> c((a.coefficients().size() - 1) * m + 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i * m] = a.coefficients()[i];
  return Polynomial(std::move(c));
}

Series to_series(const Polynomial& a, std::size_t order) {
  std::vector<mpq_class> c(order);
  for (std::size_t i = 0; i < order && i < a.coefficients().size(); ++i) c[i] = a.coefficients()[i];
  return Series(std::move(c));
}

}  // namespace blockhh
