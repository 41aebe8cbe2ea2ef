#include "nodal/enumerator.hpp"

#include <stdexcept>

#include "nodal/partitions.hpp"

namespace nodal {

namespace {

void check_r(int r, const ATable& table) {
  if (r < 0) throw std::out_of_range("node count: r must be non-negative");
  if (r > table.size()) {
    throw std::out_of_range("node count: r = " + std::to_string(r) + " exceeds the a_i table (" +
                            std::to_string(table.size()) + ")");
  }
}

Rational sign_factorial(int i) {
  Rational f(factorial(i - 1));
  return (i - 1) % 2 ? -f : f;
}

SparsePoly linear_poly(const LinearForm& f) {
  SparsePoly p;
  p.add_term({1}, f.d);
  p.add_term({0, 1}, f.k);
  p.add_term({0, 0, 1}, f.s);
  p.add_term({0, 0, 0, 1}, f.x);
  return p;
}

}  // namespace

const NodeLinearForm& a_form(int i) { return ATable::standard().form(i); }

BigInt node_count(int r, const ChernNumbers& chern, const ATable& table) {
  check_r(r, table);
  if (r == 0) return 1;
  std::vector<Rational> a;
  for (int i = 1; i <= r; ++i) a.emplace_back(table.form(i).evaluate(chern));
  const Rational n = eval_complete_bell(r, a) / Rational(factorial(r));
  if (!n.is_integer()) {
    throw consistency_error("node count P_" + std::to_string(r) + "(a)/" + std::to_string(r) +
                            "! is not an integer: " + n.to_string());
  }
  return n.to_integer();
}

BigInt node_count_partition_sum(int r, const ChernNumbers& chern, const ATable& table) {
  check_r(r, table);
  if (r == 0) return 1;
  std::vector<BigInt> a;
  for (int i = 1; i <= r; ++i) a.push_back(table.form(i).evaluate(chern));
  BigInt total;
  for_each_partition(r, [&](const SetPartition& pi) {
    BigInt term = 1;
    for (const auto& block : pi.blocks()) term *= a[block.size() - 1];
    total += term;
  });
  return total.divexact(factorial(r));
}

SparsePoly node_polynomial(int r, const ATable& table) {
  check_r(r, table);
  if (r == 0) return SparsePoly::constant(1);
  std::vector<SparsePoly> a;
  for (int i = 1; i <= r; ++i) a.push_back(linear_poly(table.form(i).a()));
  return Rational(BigInt(1), factorial(r)) * complete_bell(r).substitute(a);
}

SeveriDegree severi_degree_p2(long degree, int r, const ATable& table) {
  if (degree < 1) throw std::invalid_argument("severi degree: d must be at least 1");
  return {node_count(r, p2_chern(degree), table), r <= 2 * degree - 2};
}

std::vector<RatioRow> ratio_table(const ATable& table) {
  std::vector<RatioRow> out;
  for (int n = 1; n < table.size(); ++n) {
    const auto& lo = table.form(n);
    const auto& hi = table.form(n + 1);
    const BigInt num[] = {hi.D, hi.E, hi.F, hi.G};
    const BigInt den[] = {lo.D, lo.E, lo.F, lo.G};
    RatioRow row{n, {}};
    for (std::size_t c = 0; c < 4; ++c) {
      if (!den[c].is_zero()) row.ratio[c] = Rational(num[c], den[c]);
    }
    out.push_back(row);
  }
  return out;
}

std::string render_two_decimals(const Rational& v) {
  const BigInt num = v.numerator().abs();
  const BigInt den = v.denominator();
  // floor((200 |p| + q) / 2q)
  const mpz_class scaled = (200 * num.raw() + den.raw()) / (2 * den.raw());
  std::string digits = scaled.get_str();
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
  if (v.sign() < 0 && scaled != 0) out.insert(0, "-");
  return out;
}

DecompositionReport a_decomposition_check(int i, const ATable& table, const KazarianTable& kaz) {
  if (i < 2 || i > 4) throw std::out_of_range("decomposition check: i must be in 2..4");
  DecompositionReport rep{i, {}, {}, {}, {}};
  rep.lhs_general = table.form(i).a();
  rep.lhs_p2 = rep.lhs_general.specialize_p2();

  const Rational sf = sign_factorial(i);
  rep.rhs_general = sf * (q_general(i) + c_correction_general(i));
  rep.rhs_p2 = UniPolyD(sf) * (q_p2_extraction(i) + c_correction_p2(i));
  for (const auto& alpha : gamma_types(i)) {
    const Rational w = Rational(factorial(i)) / Rational(alpha.aut_order());
    const LinearForm& s = kaz.s_alpha(alpha);
    rep.rhs_general = rep.rhs_general - w * s;
    rep.rhs_p2 -= UniPolyD(w) * s.specialize_p2();
  }
  return rep;
}

}  // namespace nodal
