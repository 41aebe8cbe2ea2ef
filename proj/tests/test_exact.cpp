#include <doctest.h>

#include <random>

#include "nodal/exact.hpp"
#include "oracles.hpp"

using namespace nodal;

TEST_CASE("binomial") {
  CHECK(binomial(6, 2) == BigInt(15));
  CHECK(binomial(0, -2) == BigInt(0));
  CHECK(binomial(9, 3) == BigInt(84));
  CHECK(binomial(3, 5) == BigInt(0));
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
  for (long n = 0; n <= 30; ++n) {
    BigInt sum;
    for (long k = 0; k <= n; ++k) sum += binomial(n, k);
    CHECK(sum == BigInt(2).pow(static_cast<unsigned>(n)));
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k).raw() == oracle::choose(n, k));
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == BigInt(1));
  CHECK(factorial(5) == BigInt(120));
  CHECK(factorial(13) == BigInt::from_string("6227020800"));
  CHECK_THROWS(factorial(-1));
  for (long n = 0; n < 25; ++n) CHECK(factorial(n).raw() == oracle::fact(n));
}

TEST_CASE("rational arithmetic agrees with cross multiplication") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  for (int t = 0; t < 1000; ++t) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational sum = Rational(BigInt(a), BigInt(b)) + Rational(BigInt(c), BigInt(d));
    // a/b + c/d = (ad + cb) / bd, compared by cross multiplication
    CHECK(sum.numerator() * BigInt(b * d) == BigInt(a * d + c * b) * sum.denominator());
    CHECK(sum.denominator().sign() > 0);
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::from_string("6/4").to_string() == "3/2");
  CHECK(Rational::from_string("-7").to_string() == "-7");
  CHECK(Rational::from_string("0/5").to_string() == "0");
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(2)).to_integer(), consistency_error);
  CHECK_THROWS_AS(BigInt(7).divexact(BigInt(2)), consistency_error);
}

TEST_CASE("UniPolyD") {
  const UniPolyD d = UniPolyD::variable();
  const UniPolyD p = UniPolyD(150) * d * d - UniPolyD(444) * d + UniPolyD(315);
  CHECK(p.to_string() == "150d^2 - 444d + 315");
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(0)) == Rational(315));
  CHECK(p.evaluate(Rational(3)) == Rational(333));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == UniPolyD::kZeroDegree);
  CHECK(UniPolyD().to_string() == "0");
  CHECK((-(d - UniPolyD(1))).to_string() == "-d + 1");
}

TEST_CASE("interpolate_quadratic") {
  using P = std::pair<Rational, Rational>;
  const UniPolyD d = UniPolyD::variable();
  CHECK(interpolate_quadratic({P{1, 0}, P{2, 3}, P{3, 12}}) == UniPolyD(3) * d * d - UniPolyD(6) * d + UniPolyD(3));
  CHECK(interpolate_quadratic({P{0, 7}, P{1, 7}, P{2, 7}}) == UniPolyD(7));
  // Q_2 = 18d^2 - 45d + 27 through its values at d = 1, 2, 3
  CHECK(interpolate_quadratic({P{1, 0}, P{2, 9}, P{3, 54}}).to_string() == "18d^2 - 45d + 27");
  CHECK(interpolate_quadratic({P{1, 0}, P{2, 27}, P{3, 90}}).to_string() == "18d^2 - 27d + 9");
  CHECK_THROWS_AS(interpolate_quadratic({P{1, 0}, P{1, 3}, P{3, 12}}), std::invalid_argument);

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> v(-1000, 1000);
  for (int t = 0; t < 50; ++t) {
    const std::array<P, 3> pts{P{Rational(-2), v(rng)}, P{Rational(BigInt(1), BigInt(3)), v(rng)}, P{Rational(5), v(rng)}};
    const UniPolyD q = interpolate_quadratic(pts);
    for (const auto& [x, y] : pts) CHECK(q.evaluate(x) == y);
  }
}
