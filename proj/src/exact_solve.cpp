#include "blockhh/exact_solve.hpp"

#include <stdexcept>

namespace blockhh {

namespace {

using Row = std::vector<mpz_class>;

void make_primitive(Row& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    if (sgn(v) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

Row integer_row(const std::vector<mpq_class>& coeffs, const mpq_class& rhs) {
  mpz_class l = rhs.get_den();
  for (const auto& v : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  Row row;
  row.reserve(coeffs.size() + 1);
  for (const auto& v : coeffs) row.push_back(v.get_num() * (l / v.get_den()));
  row.push_back(rhs.get_num() * (l / rhs.get_den()));
  make_primitive(row);
  return row;
}

}  // namespace

std::optional<std::vector<mpq_class>> solve_exact(const std::vector<std::vector<mpq_class>>& a,
                                                  const std::vector<mpq_class>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_exact: row count mismatch");
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<Row> m;
  m.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");
    m.push_back(integer_row(a[i], b[i]));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && sgn(m[r][c]) == 0) ++r;
    if (r == rows) continue;
    std::swap(m[rank], m[r]);
    const mpz_class piv = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const mpz_class f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] = piv * m[i][j] - f * m[rank][j];
      make_primitive(m[i]);
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  // Rows below the rank have zero coefficients; a nonzero right-hand side
  // there means no solution.
  for (std::size_t i = rank; i < rows; ++i)
    if (sgn(m[i][cols]) != 0) return std::nullopt;

  std::vector<mpq_class> x(cols);
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    mpq_class acc = m[k][cols];
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(m[k][j]) != 0) acc -= mpq_class(m[k][j]) * x[j];
    x[c] = acc / mpq_class(m[k][c]);
    x[c].canonicalize();
  }
  return x;
}

}  // namespace blockhh
