#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "toroidal/series.hpp"

using namespace toroidal;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> X{"x"};

TruncatedSeries random_series(std::mt19937_64& rng, const std::vector<std::string>& vars, int D,
                              int max_terms, bool unit, bool constant_one = false) {
  TruncatedSeries s(vars, D);
  if (unit) s.add_term(std::vector<int>(vars.size(), 0), constant_one ? Rational(1) : Rational(1 + (long)(rng() % 5)));
  int n = 1 + (int)(rng() % (std::uint64_t)max_terms);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(vars.size(), 0);
    int total = 1 + (int)(rng() % (std::uint64_t)D);
    for (std::size_t i = 0; i < vars.size() && total > 0; ++i) {
      e[i] = (int)(rng() % (std::uint64_t)(total + 1));
      total -= e[i];
    }
    long num = (long)(rng() % 19) - 9;
    long den = 1 + (long)(rng() % 9);
    if (num == 0) num = 1;
    if (std::accumulate(e.begin(), e.end(), 0) == 0) continue;
    s.add_term(e, Rational(num, den));
  }
  return s;
}

}  // namespace

TEST_CASE("product of conjugates") {
  auto one = TruncatedSeries::constant(X, 4, Rational(1));
  auto x = TruncatedSeries::variable(X, 4, 0);
  auto p = (one + x) * (one - x);
  auto expected = one - x * x;
  REQUIRE(p == expected);
}

TEST_CASE("adding zero is the identity") {
  std::mt19937_64 rng(3);
  auto s = random_series(rng, XY, 6, 5, false);
  auto z = TruncatedSeries(XY, 6);
  REQUIRE(s + z == s);
}

TEST_CASE("truncated product drops the overflow terms") {
  auto one = TruncatedSeries::constant(XY, 2, Rational(1));
  auto x = TruncatedSeries::variable(XY, 2, 0);
  auto y = TruncatedSeries::variable(XY, 2, 1);
  auto p = (one + x + y) * (one + x);
  TruncatedSeries expected(XY, 2);
  expected.add_term({0, 0}, Rational(1));
  expected.add_term({1, 0}, Rational(2));
  expected.add_term({0, 1}, Rational(1));
  expected.add_term({2, 0}, Rational(1));
  expected.add_term({1, 1}, Rational(1));
  REQUIRE(p == expected);
}

TEST_CASE("invert_unit: geometric series") {
  auto one = TruncatedSeries::constant(X, 5, Rational(1));
  auto x = TruncatedSeries::variable(X, 5, 0);
  auto inv = invert_unit(UnitSeries(one + x)).series;
  TruncatedSeries expected(X, 5);
  for (int k = 0; k <= 5; ++k) expected.add_term({k}, Rational(k % 2 == 0 ? 1 : -1));
  REQUIRE(inv == expected);
}

TEST_CASE("invert_unit: non-monic constant") {
  auto two = TruncatedSeries::constant(X, 3, Rational(2));
  auto x = TruncatedSeries::variable(X, 3, 0);
  UnitSeries u(two + x);
  auto inv = invert_unit(u).series;
  REQUIRE(u.series * inv == TruncatedSeries::constant(X, 3, Rational(1)));
  TruncatedSeries expected(X, 3);
  expected.add_term({0}, Rational(1, 2));
  expected.add_term({1}, Rational(-1, 4));
  expected.add_term({2}, Rational(1, 8));
  expected.add_term({3}, Rational(-1, 16));
  REQUIRE(inv == expected);
}

TEST_CASE("invert_unit: one") {
  auto one = TruncatedSeries::constant(X, 7, Rational(1));
  REQUIRE(invert_unit(UnitSeries(one)).series == one);
}

TEST_CASE("invert_unit rejects non-units") {
  auto x = TruncatedSeries::variable(X, 3, 0);
  REQUIRE_THROWS_AS(UnitSeries(x), Error);
}

TEST_CASE("rational_power: square root of 1+x") {
  auto one = TruncatedSeries::constant(X, 2, Rational(1));
  auto x = TruncatedSeries::variable(X, 2, 0);
  auto r = rational_power(UnitSeries(one + x), Rational(1, 2)).series;
  TruncatedSeries expected(X, 2);
  expected.add_term({0}, Rational(1));
  expected.add_term({1}, Rational(1, 2));
  expected.add_term({2}, Rational(-1, 8));
  REQUIRE(r == expected);
  auto one3 = TruncatedSeries::constant(X, 3, Rational(1));
  auto x3 = TruncatedSeries::variable(X, 3, 0);
  auto r3 = rational_power(UnitSeries(one3 + x3), Rational(1, 2)).series;
  REQUIRE(r3 * r3 == one3 + x3);
}

TEST_CASE("rational_power: integer powers and the zero exponent") {
  auto one = TruncatedSeries::constant(X, 4, Rational(1));
  auto x = TruncatedSeries::variable(X, 4, 0);
  auto sq = rational_power(UnitSeries(one + x), Rational(2)).series;
  REQUIRE(sq == (one + x) * (one + x));
  auto p0 = rational_power(UnitSeries(one + x), Rational(0)).series;
  REQUIRE(p0 == one);
}

TEST_CASE("rational_power requires constant term one") {
  auto two = TruncatedSeries::constant(X, 3, Rational(2));
  auto x = TruncatedSeries::variable(X, 3, 0);
  REQUIRE_THROWS_AS(rational_power(UnitSeries(two + x), Rational(1, 2)), Error);
}

TEST_CASE("substitute: blow-up style map") {
  std::vector<std::string> src{"x", "y"};
  std::vector<std::string> dst{"x1", "y1"};
  int D = 4;
  auto s = TruncatedSeries::monomial(src, D, {1, 1}, Rational(1));  // x*y
  auto x1 = TruncatedSeries::variable(dst, D, 0);
  auto y1 = TruncatedSeries::variable(dst, D, 1);
  auto one = TruncatedSeries::constant(dst, D, Rational(1));
  auto r = substitute(s, {x1, x1 * (y1 + one)});
  TruncatedSeries expected(dst, D);
  expected.add_term({2, 1}, Rational(1));
  expected.add_term({2, 0}, Rational(1));
  REQUIRE(r == expected);
}

TEST_CASE("substitute: identity") {
  std::mt19937_64 rng(5);
  auto s = random_series(rng, XY, 5, 6, true);
  auto x = TruncatedSeries::variable(XY, 5, 0);
  auto y = TruncatedSeries::variable(XY, 5, 1);
  REQUIRE(substitute(s, {x, y}) == s);
}

TEST_CASE("substitute: linear change of variables") {
  int D = 2;
  auto s = TruncatedSeries(X, D);
  s.add_term({0}, Rational(1));
  s.add_term({1}, Rational(1));
  s.add_term({2}, Rational(1));  // 1 + x + x^2
  std::vector<std::string> dst{"x1", "y1"};
  auto x1 = TruncatedSeries::variable(dst, D, 0);
  auto y1 = TruncatedSeries::variable(dst, D, 1);
  auto r = substitute(s, {x1 + y1});
  TruncatedSeries expected(dst, D);
  expected.add_term({0, 0}, Rational(1));
  expected.add_term({1, 0}, Rational(1));
  expected.add_term({0, 1}, Rational(1));
  expected.add_term({2, 0}, Rational(1));
  expected.add_term({1, 1}, Rational(2));
  expected.add_term({0, 2}, Rational(1));
  REQUIRE(r == expected);
}

TEST_CASE("substitute: translations demand polynomials") {
  auto one = TruncatedSeries::constant(X, 3, Rational(1));
  auto x = TruncatedSeries::variable(X, 3, 0);
  auto inv = invert_unit(UnitSeries(one + x)).series;
  REQUIRE_FALSE(inv.exact());
  REQUIRE_THROWS_AS(substitute(inv, {x + one}), Error);
  auto p = one + x * x;
  REQUIRE_NOTHROW(substitute(p, {x + one}));
}

TEST_CASE("mismatched variables and truncations are rejected") {
  auto a = TruncatedSeries::constant(X, 3, Rational(1));
  auto b = TruncatedSeries::constant(XY, 3, Rational(1));
  auto c = TruncatedSeries::constant(X, 4, Rational(1));
  REQUIRE_THROWS_AS(a + b, Error);
  REQUIRE_THROWS_AS(a * c, Error);
}

TEST_CASE("property: multiplication is associative and commutative mod truncation") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    int D = 3 + (int)(rng() % 6);
    auto a = random_series(rng, XY, D, 4, false);
    auto b = random_series(rng, XY, D, 4, false);
    auto c = random_series(rng, XY, D, 4, false);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("property: units invert exactly modulo the truncation") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 40; ++it) {
    int D = 2 + (int)(rng() % 11);
    std::vector<std::string> vars = (rng() % 2) ? XY : X;
    UnitSeries u(random_series(rng, vars, D, 5, true));
    auto inv = invert_unit(u).series;
    REQUIRE(u.series * inv == TruncatedSeries::constant(vars, D, Rational(1)));
  }
}

TEST_CASE("property: rational powers satisfy the defining identity") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 30; ++it) {
    int D = 2 + (int)(rng() % 7);
    std::vector<std::string> vars = (rng() % 2) ? XY : X;
    UnitSeries u(random_series(rng, vars, D, 4, true, true));
    long p = (long)(rng() % 11) - 5;
    long q = 1 + (long)(rng() % 5);
    auto root = rational_power(u, Rational(p, q)).series;
    auto lhs = root.pow((unsigned)q);
    auto rhs = p >= 0 ? u.series.pow((unsigned)p) : invert_unit(u).series.pow((unsigned)(-p));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("property: substitution distributes over sum and product") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 25; ++it) {
    int D = 2 + (int)(rng() % 5);
    auto a = random_series(rng, XY, D, 4, false);
    auto b = random_series(rng, XY, D, 4, false);
    std::vector<std::string> dst{"s", "t"};
    auto im0 = random_series(rng, dst, D, 3, false);
    auto im1 = random_series(rng, dst, D, 3, false);
    std::vector<TruncatedSeries> images{im0, im1};
    REQUIRE(substitute(a + b, images) == substitute(a, images) + substitute(b, images));
    REQUIRE(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
  }
}
