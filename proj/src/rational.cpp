#include "blockhh/rational.hpp"

#include <stdexcept>

#include "blockhh/exact_solve.hpp"

namespace blockhh {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial{};
    den_ = Polynomial::from_integers({1});
    return;
  }
  const Polynomial g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const mpq_class d0 = den.coefficient(0);
  const mpq_class scale = sgn(d0) != 0 ? mpq_class(1 / d0) : mpq_class(1 / den.leading());
  num_ = scale * num;
  den_ = scale * den;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial::from_integers({1})) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    std::size_t terms = 0;
    for (const auto& c : p.coefficients())
      if (sgn(c) != 0) ++terms;
    return terms > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

bool equivalent(const RationalFunction& f, const RationalFunction& g) {
  return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

Series expand(const RationalFunction& f, std::size_t order) {
  if (!f.has_expansion_at_zero())
    throw std::domain_error("rational function " + f.to_string() + " has no power-series expansion at 0");
  return to_series(f.numerator(), order) * inverse(to_series(f.denominator(), order));
}

RationalFunction substitute_power(const RationalFunction& f, std::size_t m) {
  return RationalFunction(substitute_power(f.numerator(), m), substitute_power(f.denominator(), m));
}

std::optional<RationalFunction> rational_fit(const Series& s, std::size_t max_num_deg, std::size_t max_den_deg) {
  const std::size_t order = s.order();
  if (order < max_num_deg + max_den_deg + 2)
    throw std::invalid_argument("rational_fit needs at least " + std::to_string(max_num_deg + max_den_deg + 2) +
                                " coefficients, got " + std::to_string(order));

  // Unknowns d_1..d_M of den = 1 + d_1 t + ... + d_M t^M. For k > max_num_deg
  // the coefficient of t^k in den*s must vanish.
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (std::size_t k = max_num_deg + 1; k < order; ++k) {
    std::vector<mpq_class> row(max_den_deg);
    for (std::size_t j = 1; j <= max_den_deg && j <= k; ++j) row[j - 1] = s[k - j];
    a.push_back(std::move(row));
    b.push_back(-s[k]);
  }
  const auto d = solve_exact(a, b);
  if (!d) return std::nullopt;

  std::vector<mpq_class> den(max_den_deg + 1);
  den[0] = 1;
  for (std::size_t j = 1; j <= max_den_deg; ++j) den[j] = (*d)[j - 1];
  std::vector<mpq_class> num(max_num_deg + 1);
  for (std::size_t k = 0; k <= max_num_deg && k < order; ++k)
    for (std::size_t j = 0; j <= k && j <= max_den_deg; ++j) num[k] += den[j] * s[k - j];

  RationalFunction f(Polynomial(std::move(num)), Polynomial(std::move(den)));
  if (expand(f, order) != s) throw std::logic_error("rational_fit: solution does not re-expand to the input");
  return f;
}

RationalFunction descend(const RationalFunction& f, std::size_t m) {
  if (m == 0) throw std::invalid_argument("descend requires m >= 1");
  if (!f.has_expansion_at_zero())
    throw std::domain_error("descend: " + f.to_string() + " has no power-series expansion at 0");
  if (m == 1) return f;

  std::size_t chosen = m;
  for (std::size_t s = 0; s < m; ++s) {
    if (!section(f.denominator(), m, s).is_zero()) {
      chosen = s;
      break;
    }
  }
  const Polynomial a_s = section(f.numerator(), m, chosen);
  const Polynomial b_s = section(f.denominator(), m, chosen);
  for (std::size_t r = 0; r < m; ++r) {
    if (r == chosen) continue;
    if (section(f.numerator(), m, r) * b_s != a_s * section(f.denominator(), m, r)) {
      // Locate the offending exponent for the diagnostic.
      const std::size_t work = m * static_cast<std::size_t>(f.numerator().degree() + f.denominator().degree() + 4);
      const Series e = expand(f, work);
      std::string where;
      for (std::size_t i = 0; i < e.order(); ++i)
        if (i % m != 0 && sgn(e[i]) != 0) {
          where = " (coefficient of t^" + std::to_string(i) + " is " + e[i].get_str() + ")";
          break;
        }
      throw std::domain_error("descend: " + f.to_string() + " is not a function of t^" + std::to_string(m) + where);
    }
  }
  return RationalFunction(a_s, b_s);
}

}  // namespace blockhh
