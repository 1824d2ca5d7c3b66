#include <doctest.h>

#include <random>
#include <stdexcept>

#include "blockhh/exact_solve.hpp"
#include "blockhh/hochschild.hpp"
#include "blockhh/rational.hpp"

using namespace blockhh;

namespace {

Polynomial poly(std::initializer_list<long> v) { return Polynomial::from_integers(v); }
Series ints(std::initializer_list<long> v) { return Series::from_integers(v); }

Polynomial random_poly(std::mt19937& rng, std::size_t max_degree, bool unit_constant) {
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<mpq_class> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  if (unit_constant && sgn(c[0]) == 0) c[0] = 1;
  return Polynomial(std::move(c));
}

RationalFunction random_rational(std::mt19937& rng, std::size_t num_deg, std::size_t den_deg) {
  Polynomial num = random_poly(rng, num_deg, false);
  Polynomial den = random_poly(rng, den_deg, true);
  return RationalFunction(num, den);
}

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial().degree() == -1);
  CHECK((poly({1, 1}) * poly({1, -1})) == poly({1, 0, -1}));
  const auto [q, r] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(q == poly({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(poly({1, -1, -1}).to_string() == "1-t-t^2");
  CHECK(poly({0, 0, 0, 2}).to_string() == "2t^3");
  CHECK((mpq_class(1, 2) * poly({0, 1})).to_string() == "(1/2)t");
  CHECK(section(poly({1, 2, 3, 4, 5}), 2, 1) == poly({2, 4}));
  CHECK(substitute_power(poly({1, 1}), 3) == poly({1, 0, 0, 1}));
}

TEST_CASE("canonical form") {
  const RationalFunction f(poly({2, 2}), poly({2, 0, -2}));  // 2(1+t) / 2(1-t)(1+t)
  CHECK(f.numerator() == poly({1}));
  CHECK(f.denominator() == poly({1, -1}));
  CHECK(f.to_string() == "1/(1-t)");
  CHECK(RationalFunction(f.numerator(), f.denominator()) == f);
  CHECK(RationalFunction(Polynomial(), poly({3, 1})).denominator() == poly({1}));
  CHECK_THROWS_AS(RationalFunction(poly({1}), Polynomial()), std::invalid_argument);
  // no expansion at 0: den made monic
  const RationalFunction g(poly({1}), poly({0, 2}));
  CHECK(g.denominator() == poly({0, 1}));
  CHECK_FALSE(g.has_expansion_at_zero());
}

TEST_CASE("canonicalization is idempotent and equality is cross-multiplication") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalFunction f = random_rational(rng, 3, 3);
    CHECK(RationalFunction(f.numerator(), f.denominator()) == f);
    const Polynomial k = random_poly(rng, 2, true);
    const RationalFunction scaled(k * f.numerator(), mpq_class(3, 7) * (k * f.denominator()));
    const RationalFunction expected(mpq_class(7, 3) * f.numerator(), f.denominator());
    CHECK(equivalent(scaled, expected));
    CHECK(scaled == expected);
    CHECK(equivalent(scaled, f) == f.numerator().is_zero());
  }
}

TEST_CASE("expand") {
  CHECK(expand(RationalFunction(poly({1}), poly({1, -1})), 4) == ints({1, 1, 1, 1}));
  CHECK(expand(RationalFunction(poly({0, 2}), poly({1, -1})), 4) == ints({0, 2, 2, 2}));
  CHECK(expand(RationalFunction(poly({0, 0, 0, 1}), poly({1, 0, 0, -1})), 7) == ints({0, 0, 0, 1, 0, 0, 1}));
  CHECK_THROWS_AS(expand(RationalFunction(poly({1}), poly({0, 1})), 3), std::domain_error);
}

TEST_CASE("solve_exact") {
  using Q = mpq_class;
  // x + y = 3, x - y = 1
  auto x = solve_exact({{Q(1), Q(1)}, {Q(1), Q(-1)}}, {Q(3), Q(1)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  // overdetermined and consistent, with fractions
  x = solve_exact({{Q(1, 2)}, {Q(1, 3)}, {Q(2)}}, {Q(1), Q(2, 3), Q(4)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  // inconsistent
  CHECK_FALSE(solve_exact({{Q(1), Q(1)}, {Q(2), Q(2)}}, {Q(1), Q(3)}));
  // underdetermined: free variable set to zero
  x = solve_exact({{Q(1), Q(1)}}, {Q(5)});
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] == 5);
  CHECK((*x)[1] == 0);
}

TEST_CASE("rational_fit") {
  auto geometric = rational_fit(Series::from_integers({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 2, 2);
  REQUIRE(geometric);
  CHECK(*geometric == RationalFunction(poly({1}), poly({1, -1})));

  auto fib = rational_fit(ints({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144}), 1, 2);
  REQUIRE(fib);
  CHECK(*fib == RationalFunction(poly({1}), poly({1, -1, -1})));
  CHECK(expand(*fib, 12) == ints({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144}));

  // Y(t)/t * Z(t)^{-1} for p = 2
  const Series z = z_series(2, 21);
  const Series y = hh1_block_series(2, 21);
  auto phi = rational_fit(shift_down(y, 1) * inverse(z.truncated(20)), 2, 2);
  REQUIRE(phi);
  CHECK(phi->to_string() == "2/(1-t)");

  // partition numbers are not rational within small bounds
  CHECK_FALSE(rational_fit(partition_gf(20), 3, 3));
  // not enough coefficients is a precondition failure, not "no fit"
  CHECK_THROWS_AS(rational_fit(ints({1, 1, 1}), 1, 1), std::invalid_argument);
}

TEST_CASE("rational_fit is a partial inverse of expand") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t nd = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t dd = 1 + static_cast<std::size_t>((trial / 4) % 4);
    const RationalFunction f = random_rational(rng, nd, dd);
    const std::size_t order = nd + dd + 2 + 5;
    auto g = rational_fit(expand(f, order), nd, dd);
    REQUIRE(g);
    CHECK(*g == f);
  }
}

TEST_CASE("descend") {
  CHECK(descend(RationalFunction(poly({1}), poly({1, 0, -1})), 2) == RationalFunction(poly({1}), poly({1, -1})));
  const RationalFunction f(poly({3, 1}), poly({1, 5, 2}));
  CHECK(descend(f, 1) == f);
  // t^2 * 2/(1-t^2) descends to 2t/(1-t)
  CHECK(descend(RationalFunction(poly({0, 0, 2}), poly({1, 0, -1})), 2) ==
        RationalFunction(poly({0, 2}), poly({1, -1})));
  CHECK_THROWS_AS(descend(RationalFunction(poly({1}), poly({1, -1})), 2), std::domain_error);
  CHECK_THROWS_AS(descend(RationalFunction(poly({1}), poly({0, 1})), 2), std::domain_error);
}

TEST_CASE("descend round trip on random g(t^m)") {
  std::mt19937 rng(23);
  for (std::size_t m : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const RationalFunction g = random_rational(rng, 3, 3);
      // a deliberately non-reduced representation of g(t^m)
      const Polynomial k = random_poly(rng, 2, true);
      const RationalFunction f(k * substitute_power(g.numerator(), m), k * substitute_power(g.denominator(), m));
      const RationalFunction h = descend(f, m);
      CHECK(h == g);
      const std::size_t n = 30;
      CHECK(substitute_power(expand(h, n), m) == expand(f, m * n));

      // every section index with a nonzero denominator section gives the same answer
      const Polynomial num = f.numerator() * poly({1, 1});
      const Polynomial den = f.denominator() * poly({1, 1});
      for (std::size_t s = 0; s < m; ++s) {
        const Polynomial bs = section(den, m, s);
        if (bs.is_zero()) continue;
        CHECK(RationalFunction(section(num, m, s), bs) == g);
      }
    }
  }
}

TEST_CASE("descend is well defined on expansions agreeing at multiples of m") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalFunction g = random_rational(rng, 2, 2);
    const std::size_t m = 2 + static_cast<std::size_t>(trial % 3);
    const RationalFunction f1 = substitute_power(g, m);
    const Polynomial k = random_poly(rng, 3, true);
    const RationalFunction f2(k * f1.numerator(), k * f1.denominator());
    CHECK(expand(f1, 40) == expand(f2, 40));
    CHECK(descend(f1, m) == descend(f2, m));
  }
}
