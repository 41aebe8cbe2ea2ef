#include "nodal/reproduction.hpp"

#include <algorithm>

#include "nodal/atable.hpp"
#include "nodal/bell.hpp"
#include "nodal/chow.hpp"
#include "nodal/enumerator.hpp"
#include "nodal/kazarian.hpp"
#include "nodal/partitions.hpp"
#include "nodal/qseries.hpp"

namespace nodal {

namespace {

UniPolyD quad(long a, long b, long c) { return UniPolyD({Rational(c), Rational(b), Rational(a)}); }

LinearForm form(long d, long k, long s, long x) { return {d, k, s, x}; }

CheckResult make(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

Rational parse_printed(std::string cell) {
  std::replace(cell.begin(), cell.end(), ',', '.');
  const auto dot = cell.find('.');
  if (dot == std::string::npos) return Rational::from_string(cell);
  const std::string frac = cell.substr(dot + 1);
  const BigInt num = BigInt::from_string(cell.substr(0, dot) + frac);
  return Rational(num, BigInt(10).pow(static_cast<unsigned>(frac.size())));
}

CheckResult check_table1() {
  const UniPolyD q[] = {quad(3, -6, 3), quad(18, -45, 27), quad(150, -444, 315), quad(1260, -4140, 3285)};
  const UniPolyD c[] = {0, 0, -quad(30, -96, 72), -quad(420, -1425, 1158)};
  std::string bad;
  for (int n = 1; n <= 4; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    if (q_p2_extraction(n) != q[i]) bad += " Q" + std::to_string(n) + "(extraction)";
    if (q_p2_closed(n) != q[i]) bad += " Q" + std::to_string(n) + "(closed)";
    if (c_correction_p2(n) != c[i]) bad += " C" + std::to_string(n);
  }
  return make("plane Q_n and C_n, n <= 4", bad.empty(), bad.empty() ? "" : "mismatch:" + bad);
}

CheckResult check_closed_vs_extraction() {
  for (int n = 1; n <= kMaxQIndex; ++n) {
    if (q_p2_closed(n) != q_p2_extraction(n)) {
      return make("closed Q_n formula vs coefficient extraction, n <= 8", false, "differs at n = " + std::to_string(n));
    }
  }
  return make("closed Q_n formula vs coefficient extraction, n <= 8", true);
}

CheckResult check_bell() {
  auto x = [](int i) { return SparsePoly::variable(i); };
  const SparsePoly printed[] = {
      x(0),
      x(0).pow(2) + x(1),
      x(0).pow(3) + Rational(3) * x(0) * x(1) + x(2),
      x(0).pow(4) + Rational(6) * x(0).pow(2) * x(1) + Rational(4) * x(0) * x(2) + Rational(3) * x(1).pow(2) + x(3)};
  for (int r = 1; r <= 4; ++r) {
    if (complete_bell(r) != printed[r - 1]) return make("Bell polynomials", false, "P_" + std::to_string(r) + " differs");
  }
  for (int r = 1; r <= kMaxBellOrder; ++r) {
    SparsePoly sum;
    for (int l = 1; l <= r; ++l) sum += partial_bell(r, l);
    if (sum != complete_bell(r)) return make("Bell polynomials", false, "P_r != sum_l P_{r,l} at r = " + std::to_string(r));
  }
  return make("Bell polynomials P_1..P_4 and P_r = sum_l P_{r,l} (r <= 15)", true);
}

CheckResult check_mobius_r3() {
  const SparsePoly p = inclusion_exclusion_equivalence(3);
  const bool ok = p.coefficient({1, 1}) == Rational(3) && p.coefficient({0, 0, 1}) == Rational(-2) &&
                  p.terms().size() == 2;
  return make("inclusion-exclusion at r = 3 gives 3Q_1Q_2 - 2Q_3", ok, p.to_string({"Q1", "Q2", "Q3"}));
}

CheckResult check_table2() {
  const ATable& t = ATable::standard();
  const auto mm = t.tilde_mismatches();
  const bool tilde_ok = mm.size() == 1 && mm[0].index == 14 && mm[0].column == 3;
  const LinearForm listed[] = {
      form(3, 2, 0, 1),
      form(-42, -39, -6, -7),
      form(1380, 1576, 376, 138),
      form(-72360, -95670, -28842, -3888),
      form(5225472, 7725168, 2723400, 84384),
      form(-481239360, -778065120, -308078520, 7918560),
      form(53917151040L, 93895251840L, 40747613760L, -2465471520L),
      form(-7118400139200L, -13206119880240L, -6179605765200L, 516524964480L)};
  std::string bad;
  for (int i = 1; i <= 8; ++i) {
    if (t.form(i).a() != listed[i - 1]) bad += " a" + std::to_string(i);
  }
  std::string detail = "tilde mismatches:";
  for (const auto& m : mm) detail += " (i=" + std::to_string(m.index) + ", col=" + std::to_string(m.column) + ")";
  if (!bad.empty()) detail += "; list mismatch:" + bad;
  return make("a_i table: a_i/(i-1)! rows and a_1..a_8", tilde_ok && bad.empty(), detail);
}

CheckResult check_severi() {
  std::string bad;
  if (node_count_partition_sum(1, p2_chern(3)) != BigInt(12) || severi_degree_p2(3, 1).value != BigInt(12)) bad += " (3,1)";
  if (node_count_partition_sum(2, p2_chern(4)) != BigInt(225) || severi_degree_p2(4, 2).value != BigInt(225)) bad += " (4,2)";
  for (long d = 1; d <= 10; ++d) {
    const BigInt expect(3 * (d - 1) * (d - 1));
    if (node_count_partition_sum(1, p2_chern(d)) != expect || severi_degree_p2(d, 1).value != expect) {
      bad += " (" + std::to_string(d) + ",1)";
    }
  }
  return make("plane Severi degrees", bad.empty(), bad);
}

CheckResult check_decomposition() {
  std::string bad;
  const auto r2 = a_decomposition_check(2);
  if (!r2.holds_general()) bad += " i=2";
  for (int i = 3; i <= 4; ++i) {
    if (!a_decomposition_check(i).holds_p2()) bad += " i=" + std::to_string(i) + "(plane)";
  }
  const UniPolyD E = excess_a1a2_p2();
  if (E != quad(60, -192, 144)) bad += " E_A1A2";
  const auto& kaz = KazarianTable::standard();
  const UniPolyD s12 = kaz.s_alpha(MultisingularityType::parse("A1*A2")).specialize_p2();
  const UniPolyD s3 = kaz.s_alpha(MultisingularityType::parse("A3")).specialize_p2();
  if (s12 != UniPolyD(-3) * (UniPolyD(Rational(1, 2)) * E + s3)) bad += " S_A1A2";
  return make("a_i decomposition (i = 2, 3, 4) and cusp-diagonal excess", bad.empty(), bad);
}

CheckResult check_gyz(Channel c) {
  const int T = kMaxNodeIndex;
  const PowerSeries res = gyz_channel_residual(c, T, ATable::standard());
  std::string detail;
  for (int n = 0; n <= T; ++n) {
    if (!res[n].is_zero()) detail += " q^" + std::to_string(n) + ": " + res[n].to_string();
  }
  return make("GYZ " + channel_name(c) + "-channel residual through q^15", detail.empty(), detail);
}

CheckResult check_b1() {
  const int T = kMaxNodeIndex;
  const ATable& t = ATable::standard();
  const PowerSeries b1 = recover_b1(T, t);
  const bool ok = b1[0] == Rational(1) && recover_log_b1(T, t) == recover_log_b1_by_substitution(T, t) &&
                  series_log(b1) == recover_log_b1(T, t);
  return make("B_1 recovery (two derivations of log B_1)", ok);
}

CheckResult check_table4() {
  const auto rows = ratio_table();
  const auto& printed = printed_ratio_table();
  std::string bad;
  int sign_drops = 0;
  for (std::size_t n = 0; n < printed.size(); ++n) {
    for (std::size_t c = 0; c < 4; ++c) {
      const std::string& cell = printed[n][c];
      const auto& v = rows.at(n).ratio[c];
      const std::string at = " (n=" + std::to_string(n + 1) + ",col=" + std::to_string(c) + ")";
      if (cell == kUndefinedCell) {
        if (v) bad += at;
        continue;
      }
      if (!v) {
        bad += at;
        continue;
      }
      if (parse_printed(render_two_decimals(v->abs())) != parse_printed(cell)) bad += at;
      if (v->sign() < 0) ++sign_drops;
    }
  }
  std::string detail = bad.empty() ? "" : "mismatch:" + bad + "; ";
  detail += "printed without sign: " + std::to_string(sign_drops);
  return make("coefficient ratios to two decimals", bad.empty() && sign_drops == 1, detail);
}

}  // namespace

const std::vector<std::vector<std::string>>& printed_ratio_table() {
  static const std::vector<std::vector<std::string>> t = {
      {"14", "19,5", "---", "7"},           {"16,43", "20,21", "31,33", "9,86"},
      {"17,48", "20,23", "25,57", "9,39"},  {"18,05", "20,19", "23,61", "5,43"},
      {"18,42", "20,14", "22,62", "18,77"}, {"18,67", "20,11", "22,04", "51,89"},
      {"18,86", "20,09", "21,67", "29,93"}, {"19,01", "20,08", "21,40", "25,54"},
      {"19,12", "20,07", "21,21", "23,71"}, {"19,21", "20,06", "21,06", "22,73"},
      {"19,29", "20,06", "20,95", "22,13"}, {"19,36", "20,06", "20,85", "21,73"},
      {"19,41", "20,06", "20,78", "21,45"}, {"19,46", "20,06", "20,72", "21,24"}};
  return t;
}

std::vector<CheckResult> run_reproduction_checks() {
  std::vector<CheckResult> out;
  out.push_back(make("Q_1 = 3∂ + 2k + x", q_general(1) == form(3, 2, 0, 1), q_general(1).to_string()));
  out.push_back(make("Q_2 = 18∂ + 15k + 2s + 3x", q_general(2) == form(18, 15, 2, 3), q_general(2).to_string()));
  out.push_back(check_table1());
  out.push_back(check_closed_vs_extraction());
  out.push_back(check_bell());
  out.push_back(check_mobius_r3());
  out.push_back(check_table2());
  out.push_back(check_severi());
  out.push_back(check_decomposition());
  out.push_back(check_gyz(Channel::d));
  out.push_back(check_gyz(Channel::x));
  out.push_back(check_b1());
  out.push_back(check_table4());
  return out;
}

}  // namespace nodal
