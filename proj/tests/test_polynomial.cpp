#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "zfpoly/errors.hpp"
#include "zfpoly/polynomial.hpp"

using namespace zfp;
using support::poly;

TEST_CASE("known polynomials") {
  CHECK(zf_polynomial(path(4)) == poly({0, 2, 6, 4, 1}));
  CHECK(zf_polynomial(wheel(5)) == poly({0, 0, 0, 8, 5, 1}));
  CHECK(zf_polynomial(complete(1)) == poly({0, 1}));
  CHECK(zf_polynomial(empty_graph(0)) == poly({1}));
  CHECK(zf_polynomial(empty_graph(2)) == poly({0, 0, 1}));
  CHECK(count_zfs(cycle(7), 2) == 7);
  CHECK(count_zfs(cycle(7), 0) == 0);
  CHECK_THROWS_AS(count_zfs(cycle(7), 8), PreconditionError);
}

TEST_CASE("enumeration matches the matrix oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const oracle::Matrix m = oracle::random_graph(n, 0.3, rng);
    const Graph g = support::to_graph(m);
    const auto want = oracle::polynomial(m);
    CHECK(zero_forcing_counts(g) == want);
    CHECK(zf_polynomial(g, {24, 3}) == support::from_counts(want));
    CHECK(zf_polynomial_by_components(g) == support::from_counts(want));
    for (int i = 0; i <= n; ++i) CHECK(count_zfs(g, i) == want[static_cast<std::size_t>(i)]);

    const auto flags = zero_forcing_flags(g);
    for (std::uint64_t s = 0; s < flags.size(); ++s) CHECK(bool(flags[s]) == oracle::forces_all(m, s));
  }
}

TEST_CASE("thread count does not change results") {
  const Graph g = cartesian_product(path(3), cycle(4));
  const auto one = zero_forcing_counts(g, {24, 1});
  CHECK(zero_forcing_counts(g, {24, 4}) == one);
  CHECK(zero_forcing_counts(g, {24, 7}) == one);
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(zf_polynomial(path(25)), SizeCapError);
  CHECK_THROWS_AS(zf_polynomial(path(12), {10, 1}), SizeCapError);
  CHECK_NOTHROW(zf_polynomial(path(12), {12, 1}));
}

TEST_CASE("multiplication and evaluation") {
  const ZfPolynomial p2 = zf_polynomial(path(2));
  CHECK(p2 == poly({0, 2, 1}));
  CHECK(multiply(p2, p2) == poly({0, 0, 4, 4, 1}));
  CHECK(zf_polynomial(disjoint_union(path(2), path(2))) == multiply(p2, p2));

  CHECK(evaluate(poly({0, 2, 6, 4, 1}), Rational(1)) == Rational(13));
  CHECK(evaluate(poly({0, 2, 6, 4, 1}), Rational(-1, 2)) == Rational(1, 16));
  CHECK(evaluate(poly({0, 0, 0, 8, 5, 1}), Rational(2)) == Rational(64 + 80 + 32));
}

TEST_CASE("zero forcing number and unimodality") {
  CHECK(zero_forcing_number(zf_polynomial(path(6))) == 1);
  CHECK(zero_forcing_number(zf_polynomial(complete(6))) == 5);
  CHECK(zero_forcing_number(zf_polynomial(empty_graph(3))) == 3);
  CHECK(is_unimodal(poly({0, 2, 6, 4, 1})));
  CHECK(is_unimodal(poly({0, 0, 1})));
  CHECK_FALSE(is_unimodal(poly({0, 3, 1, 2})));
  CHECK(is_unimodal(poly({0, 2, 2, 1})));
}

TEST_CASE("formatting and json") {
  CHECK(to_pretty(poly({0, 0, 0, 8, 5, 1})) == "8x^3 + 5x^4 + x^5");
  CHECK(to_pretty(poly({0, 2, 6, 4, 1})) == "2x + 6x^2 + 4x^3 + x^4");
  CHECK(to_pretty(poly({1})) == "1");

  const ZfPolynomial big = zf_polynomial(complete(20));
  const auto j = to_json(big);
  CHECK(j["n"] == 20);
  CHECK(j["coeffs"][19] == "20");
  CHECK(polynomial_from_json(j) == big);
  CHECK_THROWS(polynomial_from_json(nlohmann::json{{"n", 2}, {"coeffs", {"0", "x"}}}));
}

TEST_CASE("real roots of the path polynomial on (-1, 0]") {
  const ZfPolynomial p = zf_polynomial(path(4));
  // zero is a root of multiplicity Z(G)
  CHECK(evaluate(p, Rational(0)) == 0);
  CHECK(p.coeff(zero_forcing_number(p)) != 0);
  // one sign change on a fine grid of (-1, 0), located between -0.47 and -0.45
  int changes = 0;
  Rational prev = evaluate(p, Rational(-1));
  for (int k = -199; k <= -1; ++k) {
    const Rational now = evaluate(p, Rational(k, 200));
    if ((prev > 0) != (now > 0)) ++changes;
    prev = now;
  }
  CHECK(changes == 1);
  CHECK(evaluate(p, Rational(-47, 100)) > 0);
  CHECK(evaluate(p, Rational(-45, 100)) < 0);
}
