#include <doctest.h>

#include <random>

#include "nodal/enumerator.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

// L^2 = L.K mod 2 (adjunction) and K^2 + c_2 = 0 mod 12 (Noether).
ChernNumbers random_chern(std::mt19937& rng) {
  std::uniform_int_distribution<long> v(-30, 30);
  const long d = v(rng), s = v(rng);
  const long k = 2 * v(rng) + (d & 1);
  const long x = 12 * v(rng) - s;
  return {d, k, s, x};
}

oracle::Z naive_node_count(int r, const ChernNumbers& c) {
  std::vector<oracle::Z> a;
  for (int i = 1; i <= r; ++i) a.push_back(a_form(i).evaluate(c).raw());
  oracle::Z total = 0;
  oracle::set_partitions(r, [&](const oracle::Blocks& bl) {
    oracle::Z t = 1;
    for (const auto& b : bl) t *= a[b.size() - 1];
    total += t;
  });
  return total / oracle::fact(r);
}

UniPolyD quad(long a, long b, long c) { return UniPolyD({Rational(c), Rational(b), Rational(a)}); }

}  // namespace

TEST_CASE("a_form") {
  CHECK(a_form(1).a() == LinearForm{3, 2, 0, 1});
  CHECK(a_form(2).a() == LinearForm{-42, -39, -6, -7});
  const auto& f5 = a_form(5);
  CHECK(f5.D == BigInt(217728));
  CHECK(f5.E == BigInt(321882));
  CHECK(f5.F == BigInt(113475));
  CHECK(f5.G == BigInt(3516));
  CHECK_THROWS_AS(a_form(16), std::out_of_range);
  CHECK_THROWS_AS(a_form(0), std::out_of_range);
}

TEST_CASE("tabulated a_i / (i-1)! rows") {
  const auto mm = ATable::standard().tilde_mismatches();
  REQUIRE(mm.size() == 1);
  CHECK(mm[0].index == 14);
  CHECK(mm[0].column == 3);
  CHECK(mm[0].printed == -mm[0].expected);
}

TEST_CASE("asset validation") {
  CHECK_THROWS_AS(ATable::from_json_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(ATable::from_json_text(R"([{"i":2,"a":{"d":"1","k":"0","s":"0","x":"0"},"a_tilde":{"d":"1","k":"0","s":"0","x":"0"}}])"),
                  std::invalid_argument);
  // a_3 must be divisible by 2!
  CHECK_THROWS_AS(ATable::from_json_text(R"([{"i":1,"a":{"d":"3","k":"2","s":"0","x":"1"},"a_tilde":{"d":"3","k":"2","s":"0","x":"1"}},
      {"i":2,"a":{"d":"-42","k":"-39","s":"-6","x":"-7"},"a_tilde":{"d":"-42","k":"-39","s":"-6","x":"-7"}},
      {"i":3,"a":{"d":"1","k":"0","s":"0","x":"0"},"a_tilde":{"d":"1","k":"0","s":"0","x":"0"}}])"),
                  consistency_error);
}

TEST_CASE("node counts") {
  CHECK(node_count(1, ChernNumbers{9, -9, 9, 3}) == BigInt(12));
  CHECK(node_count(2, ChernNumbers{16, -12, 9, 3}) == BigInt(225));
  CHECK(node_count(0, ChernNumbers{1, 2, 3, 4}) == BigInt(1));
  CHECK_THROWS_AS(node_count(16, p2_chern(20)), std::out_of_range);
  CHECK_THROWS_AS(node_count(-1, p2_chern(20)), std::out_of_range);

  std::mt19937 rng(13);
  for (int r = 1; r <= 6; ++r) {
    for (int t = 0; t < 5; ++t) {
      const ChernNumbers c = random_chern(rng);
      CHECK(node_count(r, c).raw() == naive_node_count(r, c));
      CHECK(node_count_partition_sum(r, c) == node_count(r, c));
    }
  }
}

TEST_CASE("node counts on a tampered table are rejected") {
  // x-coefficient of a_2 off by one: (a_1^2 + a_2)/2 = 447/2 for plane quartics
  const ATable t = ATable::from_json_text(R"([{"i":1,"a":{"d":"3","k":"2","s":"0","x":"1"},"a_tilde":{"d":"3","k":"2","s":"0","x":"1"}},
      {"i":2,"a":{"d":"-42","k":"-39","s":"-6","x":"-8"},"a_tilde":{"d":"-42","k":"-39","s":"-6","x":"-8"}}])");
  CHECK(node_count(1, p2_chern(4), t) == BigInt(27));
  CHECK_THROWS_AS(node_count(2, p2_chern(4), t), consistency_error);
}

TEST_CASE("node polynomials") {
  const SparsePoly z1 = node_polynomial(1);
  CHECK(z1.to_string(chern_variable_names()) == "3*∂ + 2*k + x");
  // Z_2 = ((3∂+2k+x)^2 + a_2) / 2
  SparsePoly a1;
  a1.add_term({1}, 3);
  a1.add_term({0, 1}, 2);
  a1.add_term({0, 0, 0, 1}, 1);
  SparsePoly a2;
  a2.add_term({1}, -42);
  a2.add_term({0, 1}, -39);
  a2.add_term({0, 0, 1}, -6);
  a2.add_term({0, 0, 0, 1}, -7);
  CHECK(node_polynomial(2) == Rational(BigInt(1), BigInt(2)) * (a1 * a1 + a2));
  for (int r = 1; r <= 15; ++r) CHECK(node_polynomial(r).total_degree() == r);

  std::mt19937 rng(17);
  for (int r = 1; r <= 8; ++r) {
    const SparsePoly z = node_polynomial(r);
    for (int t = 0; t < 3; ++t) {
      const ChernNumbers c = random_chern(rng);
      const std::vector<Rational> v{c.d, c.k, c.s, c.x};
      CHECK(z.evaluate(v) == Rational(node_count(r, c)));
    }
  }
}

TEST_CASE("plane Severi degrees") {
  CHECK(severi_degree_p2(3, 1).value == BigInt(12));
  CHECK(severi_degree_p2(4, 2).value == BigInt(225));
  CHECK(severi_degree_p2(1, 0).value == BigInt(1));
  for (long d = 1; d <= 10; ++d) CHECK(severi_degree_p2(d, 1).value == BigInt(3 * (d - 1) * (d - 1)));
  CHECK(severi_degree_p2(4, 6).within_validity);
  CHECK_FALSE(severi_degree_p2(4, 7).within_validity);
  CHECK_THROWS_AS(severi_degree_p2(0, 1), std::invalid_argument);
  // trinodal quartics and binodal quintics
  CHECK(severi_degree_p2(4, 3).value == BigInt(675));
  CHECK(severi_degree_p2(5, 2).value == BigInt(882));
}

TEST_CASE("integrality over a grid") {
  for (long d = 1; d <= 10; ++d)
    for (int r = 0; r <= 15; ++r) CHECK_NOTHROW(severi_degree_p2(d, r));
}

TEST_CASE("ratio table") {
  const auto rows = ratio_table();
  REQUIRE(rows.size() == 14);
  CHECK(*rows[0].ratio[0] == Rational(14));
  CHECK(*rows[0].ratio[1] == Rational(BigInt(39), BigInt(2)));
  CHECK_FALSE(rows[0].ratio[2].has_value());
  CHECK(render_two_decimals(Rational(BigInt(39), BigInt(2))) == "19.50");
  CHECK(render_two_decimals(Rational(14)) == "14.00");
  CHECK(render_two_decimals(Rational(BigInt(-1), BigInt(1000))) == "0.00");
  CHECK(render_two_decimals(Rational(BigInt(-1), BigInt(200))) == "-0.01");
  for (const auto& row : rows)
    for (const auto& v : row.ratio)
      if (v) CHECK(render_two_decimals(v->abs()) == oracle::two_decimals(v->raw()));
}

TEST_CASE("decomposition of a_i") {
  const auto r2 = a_decomposition_check(2);
  CHECK(r2.holds_general());
  CHECK(r2.lhs_general == LinearForm{-42, -39, -6, -7});
  const auto r3 = a_decomposition_check(3);
  CHECK(r3.lhs_p2 == quad(1380, -4728, 3798));
  CHECK(r3.holds_p2());
  CHECK(r3.holds_general());
  const auto r4 = a_decomposition_check(4);
  CHECK(r4.lhs_p2 == quad(-72360, 287010, -271242));
  CHECK(r4.holds_p2());
  CHECK(r4.holds_general());
  CHECK_THROWS_AS(a_decomposition_check(1), std::out_of_range);
  CHECK_THROWS_AS(a_decomposition_check(5), std::out_of_range);
}
