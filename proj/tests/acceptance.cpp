// Acceptance suite: one PASS/FAIL line per criterion. Tolerance is exact
// equality except for the ratio table, which is compared at two decimals.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nodal/atable.hpp"
#include "nodal/bell.hpp"
#include "nodal/chow.hpp"
#include "nodal/enumerator.hpp"
#include "nodal/kazarian.hpp"
#include "nodal/partitions.hpp"
#include "nodal/qseries.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

struct Outcome {
  bool ok;
  std::string note;
};

UniPolyD quad(long a, long b, long c) { return UniPolyD({Rational(c), Rational(b), Rational(a)}); }

Outcome c1_q1() {
  const LinearForm q = q_general(1);
  return {q == LinearForm{3, 2, 0, 1}, q.to_string()};
}

Outcome c2_q2() {
  const LinearForm q = q_general(2);
  return {q == LinearForm{18, 15, 2, 3}, q.to_string()};
}

Outcome c3_table1() {
  const UniPolyD q[] = {quad(3, -6, 3), quad(18, -45, 27), quad(150, -444, 315), quad(1260, -4140, 3285)};
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    ok = ok && q_p2_extraction(n) == q[n - 1] && q_p2_closed(n) == q[n - 1];
  }
  ok = ok && c_correction_p2(1).is_zero() && c_correction_p2(2).is_zero();
  ok = ok && c_correction_p2(3) == -quad(30, -96, 72) && c_correction_p2(4) == -quad(420, -1425, 1158);
  return {ok, "Q_1..Q_4, C_1..C_4"};
}

Outcome c4_closed_vs_extraction() {
  bool ok = true;
  std::string note;
  for (int n = 1; n <= kMaxQIndex; ++n) {
    const UniPolyD e = q_p2_extraction(n);
    bool same = q_p2_closed(n) == e;
    // third path: numeric expansion at d = 0, 1, 2, 7
    for (long d : {0L, 1L, 2L, 7L}) same = same && e.evaluate(d).raw() == oracle::q_plane_numeric(n, d);
    if (!same) note += " n=" + std::to_string(n);
    ok = ok && same;
  }
  return {ok, note.empty() ? "n = 1..8" : "differs at" + note};
}

Outcome c5_bell() {
  auto x = [](int i) { return SparsePoly::variable(i - 1); };
  bool ok = complete_bell(1) == x(1) && complete_bell(2) == x(1).pow(2) + x(2) &&
            complete_bell(3) == x(1).pow(3) + Rational(3) * x(1) * x(2) + x(3) &&
            complete_bell(4) == x(1).pow(4) + Rational(6) * x(1).pow(2) * x(2) + Rational(4) * x(1) * x(3) +
                                    Rational(3) * x(2).pow(2) + x(4);
  for (int r = 1; r <= kMaxBellOrder; ++r) {
    SparsePoly sum;
    for (int l = 1; l <= r; ++l) sum += partial_bell(r, l);
    ok = ok && sum == complete_bell(r);
  }
  for (int r = 1; r <= 8; ++r) {
    for (const auto& [j, n] : oracle::bell_coefficients(r)) ok = ok && complete_bell(r).coefficient(j) == Rational(n);
  }
  return {ok, "P_1..P_4 verbatim; P_r = sum_l P_{r,l}, r <= 15"};
}

Outcome c6_mobius() {
  // -sum_{pi != finest} mu(pi) prod_B Q_{|B|}, grouped by block-size signature,
  // with mu from the lattice recursion.
  std::map<std::vector<int>, oracle::Z> poly;
  for (const auto& [blocks, mu] : oracle::mobius_by_recursion(3)) {
    if (blocks.size() == 3) continue;
    std::vector<int> j(3, 0);
    for (const auto& b : blocks) ++j[b.size() - 1];
    while (!j.empty() && j.back() == 0) j.pop_back();
    poly[j] -= mu;
  }
  const SparsePoly lib = inclusion_exclusion_equivalence(3);
  const bool ok = poly.size() == 2 && poly[{1, 1}] == 3 && poly[{0, 0, 1}] == -2 &&
                  lib.coefficient({1, 1}) == Rational(3) && lib.coefficient({0, 0, 1}) == Rational(-2) &&
                  lib.terms().size() == 2;
  return {ok, lib.to_string({"Q1", "Q2", "Q3"})};
}

Outcome c7_table2() {
  const auto mm = ATable::standard().tilde_mismatches();
  bool ok = mm.size() == 1 && mm[0].index == 14 && mm[0].column == 3;
  const long listed[8][4] = {{3, 2, 0, 1},
                             {-42, -39, -6, -7},
                             {1380, 1576, 376, 138},
                             {-72360, -95670, -28842, -3888},
                             {5225472, 7725168, 2723400, 84384},
                             {-481239360, -778065120, -308078520, 7918560},
                             {53917151040L, 93895251840L, 40747613760L, -2465471520L},
                             {-7118400139200L, -13206119880240L, -6179605765200L, 516524964480L}};
  for (int i = 1; i <= 8; ++i) {
    const auto& r = listed[i - 1];
    ok = ok && a_form(i).a() == LinearForm{r[0], r[1], r[2], r[3]};
  }
  return {ok, std::to_string(mm.size()) + " tilde cell(s) differ, expected only i = 14, x"};
}

Outcome c8_severi() {
  auto brute = [](long d, int r) -> oracle::Q {
    std::vector<oracle::Z> a;
    for (int i = 1; i <= r; ++i) a.push_back(a_form(i).evaluate(p2_chern(d)).raw());
    oracle::Z total = 0;
    oracle::set_partitions(r, [&](const oracle::Blocks& bl) {
      oracle::Z t = 1;
      for (const auto& b : bl) t *= a[b.size() - 1];
      total += t;
    });
    return oracle::Q(total) / oracle::Q(oracle::fact(r));
  };
  bool ok = brute(3, 1) == 12 && severi_degree_p2(3, 1).value == BigInt(12);
  ok = ok && brute(4, 2) == 225 && severi_degree_p2(4, 2).value == BigInt(225);
  for (long d = 1; d <= 10; ++d) {
    ok = ok && brute(d, 1) == 3 * (d - 1) * (d - 1) && severi_degree_p2(d, 1).value == BigInt(3 * (d - 1) * (d - 1));
  }
  return {ok, "N(3,1) = 12, N(4,2) = 225, N(d,1) = 3(d-1)^2 for d <= 10"};
}

Outcome c9_decomposition() {
  bool ok = a_decomposition_check(2).holds_general();
  const auto r3 = a_decomposition_check(3), r4 = a_decomposition_check(4);
  ok = ok && r3.holds_p2() && r3.lhs_p2 == quad(1380, -4728, 3798);
  ok = ok && r4.holds_p2() && r4.lhs_p2 == quad(-72360, 287010, -271242);
  const UniPolyD e = excess_a1a2_p2();
  const auto& kaz = KazarianTable::standard();
  ok = ok && e == quad(60, -192, 144);
  ok = ok && kaz.s_alpha(MultisingularityType::parse("A1*A2")).specialize_p2() ==
                 UniPolyD(-3) * (UniPolyD(Rational(BigInt(1), BigInt(2))) * e +
                                 kaz.s_alpha(MultisingularityType::parse("A3")).specialize_p2());
  return {ok, "i = 2 general; i = 3, 4 plane; E_A1A2 = 60d^2 - 192d + 144"};
}

// Naive channel residual: sum (-1)^{l-1} c_l t^l / l - alpha A + beta B.
oracle::Series naive_residual(const std::function<BigInt(const NodeLinearForm&)>& pick, const oracle::Q& alpha,
                              const oracle::Q& beta, int T) {
  const auto dg2 = oracle::d_power_g2(1, T + 2);
  const auto d2g2 = oracle::d_power_g2(2, T + 2);
  const auto A = oracle::log1p_series(oracle::Series(dg2.begin() + 1, dg2.begin() + T + 2));
  const auto prod = oracle::mul(oracle::delta(T + 2), d2g2);
  const auto B = oracle::log1p_series(oracle::Series(prod.begin() + 2, prod.begin() + T + 3));
  oracle::Series t(dg2.begin(), dg2.begin() + T + 1), power(static_cast<std::size_t>(T) + 1, 0), out(power);
  power[0] = 1;
  for (int l = 1; l <= T; ++l) {
    power = oracle::mul(power, t);
    const oracle::Q w = oracle::Q(pick(a_form(l)).raw()) / l * (l % 2 ? 1 : -1);
    for (int n = 0; n <= T; ++n) out[n] += w * power[n];
  }
  for (int n = 0; n <= T; ++n) out[n] += -alpha * A[n] + beta * B[n];
  return out;
}

Outcome c10_gyz() {
  const int T = 15;
  std::string note;
  bool ok = true;
  struct Ch {
    Channel c;
    std::function<BigInt(const NodeLinearForm&)> pick;
    oracle::Q alpha, beta;
  };
  const Ch chans[] = {{Channel::d, [](const NodeLinearForm& f) { return f.D; }, oracle::frac(1, 2), 0},
                      {Channel::x, [](const NodeLinearForm& f) { return f.G; }, oracle::frac(1, 12), oracle::frac(1, 24)}};
  for (const auto& ch : chans) {
    const PowerSeries lib = gyz_channel_residual(ch.c, T, ATable::standard());
    const oracle::Series ref = naive_residual(ch.pick, ch.alpha, ch.beta, T);
    for (int n = 0; n <= T; ++n) {
      if (lib[n].raw() != ref[n]) {
        ok = false;
        note += " " + channel_name(ch.c) + "@q^" + std::to_string(n) + ": library and oracle disagree;";
      }
      if (!lib[n].is_zero()) {
        ok = false;
        note += " " + channel_name(ch.c) + "@q^" + std::to_string(n) + " = " + lib[n].to_string() + ";";
      }
    }
  }
  return {ok, note.empty() ? "d and x channels vanish through q^15" : "nonzero:" + note};
}

Outcome c11_b1() {
  const int T = 15;
  const ATable& t = ATable::standard();
  const PowerSeries l1 = recover_log_b1(T, t);
  const PowerSeries b1 = recover_b1(T, t);
  const bool ok = b1[0] == Rational(1) && l1 == recover_log_b1_by_substitution(T, t) && series_log(b1) == l1;
  return {ok, "b_0 = 1; y_r(n) formula equals substitution through q^15"};
}

Outcome c12_table4() {
  const std::vector<std::vector<std::string>> printed = {
      {"14", "19,5", "---", "7"},           {"16,43", "20,21", "31,33", "9,86"},
      {"17,48", "20,23", "25,57", "9,39"},  {"18,05", "20,19", "23,61", "5,43"},
      {"18,42", "20,14", "22,62", "18,77"}, {"18,67", "20,11", "22,04", "51,89"},
      {"18,86", "20,09", "21,67", "29,93"}, {"19,01", "20,08", "21,40", "25,54"},
      {"19,12", "20,07", "21,21", "23,71"}, {"19,21", "20,06", "21,06", "22,73"},
      {"19,29", "20,06", "20,95", "22,13"}, {"19,36", "20,06", "20,85", "21,73"},
      {"19,41", "20,06", "20,78", "21,45"}, {"19,46", "20,06", "20,72", "21,24"}};
  const auto rows = ratio_table();
  bool ok = rows.size() == printed.size();
  int unsigned_cells = 0;
  std::string note;
  for (std::size_t n = 0; ok && n < printed.size(); ++n) {
    for (std::size_t c = 0; c < 4; ++c) {
      const auto& v = rows[n].ratio[c];
      if (printed[n][c] == "---") {
        ok = ok && !v;
        continue;
      }
      if (!v) {
        ok = false;
        continue;
      }
      const oracle::Q mine = oracle::printed(oracle::two_decimals(v->raw()));
      const bool match = mine == oracle::printed(printed[n][c]) && render_two_decimals(v->abs()) == oracle::two_decimals(v->raw());
      if (!match) note += " (n=" + std::to_string(n + 1) + ",col=" + std::to_string(c) + ")";
      ok = ok && match;
      if (v->sign() < 0) ++unsigned_cells;
    }
  }
  ok = ok && unsigned_cells == 1;
  return {ok, (note.empty() ? std::string() : "mismatch" + note + "; ") + "magnitudes compared; " +
                  std::to_string(unsigned_cells) + " cell printed without its sign"};
}

Outcome c13_properties() {
  bool ok = true;
  for (int r = 1; r <= 10; ++r) {
    long n = 0;
    for_each_partition(r, [&](const SetPartition&) { ++n; });
    ok = ok && n == oracle::count_set_partitions(r) && BigInt(n) == bell_number(r);
  }
  // exp/log on unit series with structured coefficients
  for (int seed = 1; seed <= 20; ++seed) {
    PowerSeries u(12);
    u[0] = 1;
    for (int n = 1; n <= 12; ++n) u[n] = Rational(BigInt((seed * n * 7) % 11 - 5), BigInt(1 + (seed + n) % 4));
    ok = ok && series_exp(series_log(u)) == u;
  }
  int cells = 0;
  try {
    for (long d = 1; d <= 10; ++d)
      for (int r = 0; r <= 15; ++r) {
        severi_degree_p2(d, r);
        ++cells;
      }
  } catch (const consistency_error&) {
    ok = false;
  }
  return {ok && cells == 160, "Bell counts r <= 10; exp/log round trips; " + std::to_string(cells) + "/160 integral"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pushforward of the critical class gives Q_1 = 3∂ + 2k + x", c1_q1},
      {"Q_2 = 18∂ + 15k + 2s + 3x", c2_q2},
      {"plane Q_n and C_n table, both code paths", c3_table1},
      {"closed formula equals extraction for n = 1..8", c4_closed_vs_extraction},
      {"Bell polynomials", c5_bell},
      {"Möbius inclusion-exclusion at r = 3", c6_mobius},
      {"a_i table consistency", c7_table2},
      {"plane Severi degrees against a partition-sum oracle", c8_severi},
      {"a_i decomposition identities", c9_decomposition},
      {"GYZ d- and x-channel residuals vanish through q^15", c10_gyz},
      {"B_1 recovery", c11_b1},
      {"ratio table at two decimals", c12_table4},
      {"property suites", c13_properties},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& [name, fn] : criteria) {
    ++idx;
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s %2d  %s  [tolerance: %s]  %s\n", o.ok ? "PASS" : "FAIL", idx, name.c_str(),
                idx == 12 ? "2 decimals" : "exact", o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
