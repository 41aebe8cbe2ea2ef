#include <doctest.h>

#include <random>

#include "nodal/bell.hpp"
#include "nodal/partitions.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

SparsePoly x(int i) { return SparsePoly::variable(i - 1); }

std::vector<Rational> random_values(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return v;
}

std::vector<oracle::Q> to_q(const std::vector<Rational>& v) {
  std::vector<oracle::Q> out;
  for (const auto& r : v) out.push_back(r.raw());
  return out;
}

}  // namespace

TEST_CASE("complete Bell polynomials, small orders") {
  CHECK(complete_bell(1) == x(1));
  CHECK(complete_bell(2) == x(1).pow(2) + x(2));
  CHECK(complete_bell(3) == x(1).pow(3) + Rational(3) * x(1) * x(2) + x(3));
  CHECK(complete_bell(4) ==
        x(1).pow(4) + Rational(6) * x(1).pow(2) * x(2) + Rational(4) * x(1) * x(3) + Rational(3) * x(2).pow(2) + x(4));
  CHECK_THROWS_AS(complete_bell(0), std::out_of_range);
  CHECK_THROWS_AS(complete_bell(16), std::out_of_range);
}

TEST_CASE("partial Bell polynomials") {
  CHECK(partial_bell(4, 2) == Rational(3) * x(2).pow(2) + Rational(4) * x(1) * x(3));
  for (int n = 1; n <= 8; ++n) {
    CHECK(partial_bell(n, n) == x(1).pow(static_cast<unsigned>(n)));
    CHECK(partial_bell(n, 1) == x(n));
  }
  CHECK_THROWS(partial_bell(4, 5));
  CHECK_THROWS(partial_bell(4, 0));
  for (int r = 1; r <= kMaxBellOrder; ++r) {
    SparsePoly sum;
    for (int l = 1; l <= r; ++l) sum += partial_bell(r, l);
    CHECK(sum == complete_bell(r));
  }
}

TEST_CASE("coefficients count set partitions") {
  for (int r = 1; r <= 10; ++r) {
    const auto expect = oracle::bell_coefficients(r);
    const auto& terms = complete_bell(r).terms();
    CHECK(terms.size() == expect.size());
    for (const auto& [j, n] : expect) CHECK(complete_bell(r).coefficient(j) == Rational(n));
  }
}

TEST_CASE("all-ones substitution gives Bell numbers") {
  for (int r = 1; r <= kMaxBellOrder; ++r) {
    const std::vector<Rational> ones(static_cast<std::size_t>(r), Rational(1));
    CHECK(complete_bell(r).evaluate(ones) == Rational(bell_number(r)));
  }
}

TEST_CASE("evaluation") {
  const std::vector<Rational> v{27, -279};
  CHECK(eval_complete_bell(2, v) == Rational(450));
  CHECK(eval_complete_bell(3, std::vector<Rational>{1, 1, 1}) == Rational(5));
  CHECK(eval_complete_bell(1, std::vector<Rational>{Rational(BigInt(2), BigInt(7))}) == Rational(BigInt(2), BigInt(7)));
  CHECK_THROWS_AS(eval_complete_bell(3, std::vector<Rational>{1, 1}), std::invalid_argument);

  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int r = 1 + t % 10;
    const auto vals = random_values(rng, r);
    const Rational a = eval_complete_bell_partition_sum(r, vals);
    CHECK(a == eval_complete_bell_exp(r, vals));
    CHECK(a.raw() == oracle::bell_recurrence(r, to_q(vals)));
  }
  for (int r = 1; r <= 7; ++r) {
    const auto vals = random_values(rng, r);
    CHECK(eval_complete_bell(r, vals).raw() == oracle::bell_partition_sum(r, to_q(vals)));
  }
  for (int r = 11; r <= 15; ++r) {
    const auto vals = random_values(rng, r);
    CHECK(eval_complete_bell(r, vals).raw() == oracle::bell_recurrence(r, to_q(vals)));
    CHECK(complete_bell(r).evaluate(vals) == eval_complete_bell(r, vals));
  }
}

TEST_CASE("bell_transform") {
  auto b = bell_transform(std::vector<Rational>{0, 0, 0});
  CHECK(b == std::vector<Rational>{1, 0, 0, 0});
  b = bell_transform(std::vector<Rational>{1, 0, 0});
  CHECK(b == std::vector<Rational>{1, 1, Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(6))});
}

TEST_CASE("SparsePoly algebra") {
  const SparsePoly p = x(1) + Rational(2) * x(2);
  CHECK(p.total_degree() == 1);
  CHECK(SparsePoly().total_degree() == -1);
  CHECK((p * p).to_string() == "x1^2 + 4*x1*x2 + 4*x2^2");
  CHECK((p - p).is_zero());
  const std::vector<SparsePoly> sub{x(2), x(1)};
  CHECK(p.substitute(sub) == x(2) + Rational(2) * x(1));
}
