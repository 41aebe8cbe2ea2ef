// nodal_atlas: exact node counts, node polynomials, equivalence terms and
// q-series from the command line.
//
// Exit status: 0 ok, 2 bad input, 3 an internal consistency check failed.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nodal/atable.hpp"
#include "nodal/bell.hpp"
#include "nodal/chow.hpp"
#include "nodal/enumerator.hpp"
#include "nodal/kazarian.hpp"
#include "nodal/partitions.hpp"
#include "nodal/qseries.hpp"
#include "nodal/reproduction.hpp"
#include "nodal/serialize.hpp"

using namespace nodal;

namespace {

enum class Format { text, json, csv };

struct Surface {
  std::string kind;  // "p2" or empty
  long degree = 0;
  std::string chern;

  bool given() const { return !kind.empty() || !chern.empty(); }

  ChernNumbers resolve() const {
    if (!kind.empty() && !chern.empty()) throw std::invalid_argument("give either 'p2 --degree d' or --chern, not both");
    if (!chern.empty()) {
      std::vector<BigInt> v;
      std::stringstream ss(chern);
      for (std::string item; std::getline(ss, item, ',');) v.push_back(BigInt::from_string(item));
      if (v.size() != 4) throw std::invalid_argument("--chern needs four comma-separated integers ∂,k,s,x");
      return {v[0], v[1], v[2], v[3]};
    }
    if (kind != "p2") throw std::invalid_argument("unknown surface '" + kind + "' (only p2 is built in)");
    if (degree < 1) throw std::invalid_argument("p2 needs --degree d with d >= 1");
    return p2_chern(degree);
  }
};

void add_surface(CLI::App* cmd, Surface& s) {
  cmd->add_option("surface", s.kind, "built-in surface (p2)");
  cmd->add_option("--degree", s.degree, "degree d of O(d) on p2");
  cmd->add_option("--chern", s.chern, "Chern numbers ∂,k,s,x");
}

void emit(Format f, const Json& json, const std::string& text, const std::vector<std::vector<std::string>>& csv) {
  switch (f) {
    case Format::json: std::cout << json.dump(2) << "\n"; break;
    case Format::text: std::cout << text << "\n"; break;
    case Format::csv:
      for (const auto& row : csv) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
      }
      break;
  }
}

std::vector<Rational> parse_values(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(Rational::from_string(item));
  return out;
}

std::string series_text(const PowerSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) out += (n ? "\n" : "") + std::to_string(n) + " " + s[n].to_string();
  return out;
}

std::vector<std::vector<std::string>> series_csv(const PowerSeries& s) {
  std::vector<std::vector<std::string>> rows{{"n", "coefficient"}};
  for (int n = 0; n <= s.order(); ++n) rows.push_back({std::to_string(n), s[n].to_string()});
  return rows;
}

std::vector<std::vector<std::string>> form_csv(const LinearForm& f) {
  return {{"d", "k", "s", "x"}, {f.d.to_string(), f.k.to_string(), f.s.to_string(), f.x.to_string()}};
}

std::vector<std::vector<std::string>> poly_csv(const UniPolyD& p) {
  std::vector<std::vector<std::string>> rows{{"power", "coefficient"}};
  for (int i = 0; i <= p.degree(); ++i) rows.push_back({std::to_string(i), p.coefficient(i).to_string()});
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact node polynomials, Severi degrees and related tables"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  app.add_option("--format", format_name, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // count
  Surface count_surface;
  int nodes = -1;
  auto* count = app.add_subcommand("count", "number of r-nodal curves N_r(S, L)");
  add_surface(count, count_surface);
  count->add_option("--nodes,-r", nodes, "number of nodes r")->required();

  // zr
  int zr_r = 0;
  auto* zr = app.add_subcommand("zr", "node polynomial Z_r in ∂, k, s, x");
  zr->add_option("--r,-r", zr_r, "r")->required();

  // qn
  int qn_n = 0;
  bool qn_p2 = false;
  std::string oracle = "extraction";
  auto* qn = app.add_subcommand("qn", "diagonal equivalence term Q_n");
  qn->add_option("--n,-n", qn_n, "n")->required();
  qn->add_flag("--p2", qn_p2, "plane, as a polynomial in d");
  qn->add_option("--oracle", oracle, "plane code path: extraction, closed or literal")
      ->check(CLI::IsMember({"extraction", "closed", "literal"}));

  // cn
  int cn_n = 0;
  bool cn_p2 = false;
  auto* cn = app.add_subcommand("cn", "correction term C_n, n <= 4");
  cn->add_option("--n,-n", cn_n, "n")->required();
  cn->add_flag("--p2", cn_p2, "plane, as a polynomial in d");

  // bell
  int bell_r = 0;
  int bell_l = 0;
  std::string bell_values;
  auto* bell = app.add_subcommand("bell", "complete or partial Bell polynomial");
  bell->add_option("--r,-r", bell_r, "order r")->required();
  bell->add_option("--l,-l", bell_l, "block count l for the partial polynomial");
  bell->add_option("--values", bell_values, "evaluate at comma-separated rationals x1,...,xr");

  // partitions
  int part_r = 0;
  auto* parts = app.add_subcommand("partitions", "set partitions of [r] with Möbius coefficients");
  parts->add_option("--r,-r", part_r, "r")->required();

  // kazarian
  std::string kaz_type;
  Surface kaz_surface;
  auto* kaz = app.add_subcommand("kazarian", "S_alpha and the multisingularity count N_alpha");
  kaz->add_option("--type", kaz_type, "type such as A1^2*A2")->required();
  add_surface(kaz, kaz_surface);

  // series
  std::string series_name;
  bool gyz = false;
  std::string channel = "d";
  int order = kMaxNodeIndex;
  auto* series = app.add_subcommand("series", "q-series: g2, delta, b1, b2, or --gyz-check");
  series->add_option("name", series_name, "g2, delta, logb1, b1, logb2 or b2");
  series->add_flag("--gyz-check", gyz, "residual of one channel of the log GYZ identity");
  series->add_option("--channel", channel, "d, k, s or x");
  series->add_option("--order", order, "truncation order");

  auto* ratios = app.add_subcommand("ratios", "successive ratios of the D, E, F, G coefficients");
  auto* check = app.add_subcommand("check", "run the built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const Format fmt = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;

  try {
    if (count->parsed()) {
      const ChernNumbers c = count_surface.resolve();
      BigInt n;
      bool valid = true;
      if (count_surface.kind == "p2") {
        const SeveriDegree sd = severi_degree_p2(count_surface.degree, nodes);
        n = sd.value;
        valid = sd.within_validity;
      } else {
        n = node_count(nodes, c);
      }
      if (!valid) {
        std::cerr << "warning: r = " << nodes << " > 2d - 2 = " << 2 * count_surface.degree - 2
                  << "; the value is virtual\n";
      }
      emit(fmt, Json{{"chern", to_json(c)}, {"nodes", std::to_string(nodes)}, {"count", n.to_string()}},
           n.to_string(), {{"nodes", "count"}, {std::to_string(nodes), n.to_string()}});
    } else if (zr->parsed()) {
      const SparsePoly z = node_polynomial(zr_r);
      std::vector<std::vector<std::string>> rows{{"d_exp", "k_exp", "s_exp", "x_exp", "coefficient"}};
      for (const auto& [e, c] : z.terms()) {
        std::vector<std::string> row;
        for (std::size_t i = 0; i < 4; ++i) row.push_back(std::to_string(i < e.size() ? e[i] : 0));
        row.push_back(c.to_string());
        rows.push_back(row);
      }
      emit(fmt, Json{{"r", std::to_string(zr_r)}, {"variables", chern_variable_names()}, {"terms", to_json(z)}},
           z.to_string(chern_variable_names()), rows);
    } else if (qn->parsed()) {
      if (qn_p2) {
        const UniPolyD q = oracle == "closed"    ? q_p2_closed(qn_n)
                           : oracle == "literal" ? q_p2_closed_literal(qn_n)
                                                 : q_p2_extraction(qn_n);
        emit(fmt, Json{{"n", std::to_string(qn_n)}, {"Q", to_json(q)}}, q.to_string(), poly_csv(q));
      } else {
        const LinearForm q = q_general(qn_n);
        emit(fmt, Json{{"n", std::to_string(qn_n)}, {"Q", to_json(q)}}, q.to_string(), form_csv(q));
      }
    } else if (cn->parsed()) {
      if (cn_p2) {
        const UniPolyD c = c_correction_p2(cn_n);
        emit(fmt, Json{{"n", std::to_string(cn_n)}, {"C", to_json(c)}}, c.to_string(), poly_csv(c));
      } else {
        const LinearForm c = c_correction_general(cn_n);
        emit(fmt, Json{{"n", std::to_string(cn_n)}, {"C", to_json(c)}}, c.to_string(), form_csv(c));
      }
    } else if (bell->parsed()) {
      if (bell_r < 1 || bell_r > kMaxBellOrder) {
        throw std::out_of_range("bell: r must be in 1.." + std::to_string(kMaxBellOrder));
      }
      const SparsePoly p = bell_l ? partial_bell(bell_r, bell_l) : complete_bell(bell_r);
      if (!bell_values.empty()) {
        const auto v = parse_values(bell_values);
        if (static_cast<int>(v.size()) < bell_r) throw std::invalid_argument("bell: need r values");
        const Rational val = bell_l ? p.evaluate(v) : eval_complete_bell(bell_r, v);
        emit(fmt, Json{{"r", std::to_string(bell_r)}, {"value", val.to_string()}}, val.to_string(),
             {{"value"}, {val.to_string()}});
      } else {
        std::vector<std::vector<std::string>> rows{{"exponents", "coefficient"}};
        for (const auto& [e, c] : p.terms()) {
          std::string ex;
          for (std::size_t i = 0; i < e.size(); ++i) ex += (i ? " " : "") + std::to_string(e[i]);
          rows.push_back({ex, c.to_string()});
        }
        emit(fmt, Json{{"r", std::to_string(bell_r)}, {"terms", to_json(p)}}, p.to_string(), rows);
      }
    } else if (parts->parsed()) {
      Json arr = Json::array();
      std::string text;
      std::vector<std::vector<std::string>> rows{{"partition", "mobius"}};
      for_each_partition(part_r, [&](const SetPartition& pi) {
        const BigInt mu = mobius_coefficient(pi);
        arr.push_back(Json{{"blocks", to_json(pi)}, {"mobius", mu.to_string()}});
        text += pi.to_string() + " " + mu.to_string() + "\n";
        rows.push_back({pi.to_string(), mu.to_string()});
      });
      if (!text.empty()) text.pop_back();
      emit(fmt, Json{{"r", std::to_string(part_r)}, {"count", std::to_string(arr.size())}, {"partitions", arr}},
           text, rows);
    } else if (kaz->parsed()) {
      const auto alpha = MultisingularityType::parse(kaz_type);
      const LinearForm& s = KazarianTable::standard().s_alpha(alpha);
      Json j{{"type", alpha.to_string()},
             {"codim", std::to_string(alpha.codim())},
             {"aut", alpha.aut_order().to_string()},
             {"S", to_json(s)}};
      std::string text = "S_" + alpha.to_string() + " = " + s.to_string();
      std::vector<std::vector<std::string>> rows{{"type", "d", "k", "s", "x", "count"}};
      std::string cnt;
      if (kaz_surface.given()) {
        const ChernNumbers c = kaz_surface.resolve();
        cnt = count_multisingular(alpha, c).to_string();
        j["chern"] = to_json(c);
        j["count"] = cnt;
        text += "\nN_" + alpha.to_string() + " = " + cnt;
      }
      rows.push_back({alpha.to_string(), s.d.to_string(), s.k.to_string(), s.s.to_string(), s.x.to_string(), cnt});
      emit(fmt, j, text, rows);
    } else if (series->parsed()) {
      const ATable& t = ATable::standard();
      if (gyz) {
        const Channel c = parse_channel(channel);
        const PowerSeries res = gyz_channel_residual(c, order, t);
        std::string text = "residual: 0";
        std::vector<std::vector<std::string>> rows{{"n", "residual"}};
        for (int n = 0; n <= res.order(); ++n) rows.push_back({std::to_string(n), res[n].to_string()});
        if (!res.is_zero()) {
          text = "residual: nonzero";
          for (int n = 0; n <= res.order(); ++n) {
            if (!res[n].is_zero()) text += "\n  q^" + std::to_string(n) + ": " + res[n].to_string();
          }
        }
        emit(fmt, Json{{"channel", channel_name(c)}, {"order", std::to_string(order)}, {"residual", to_json(res)},
                       {"zero", res.is_zero()}},
             text, rows);
        if (!res.is_zero()) {
          std::cerr << "error: " << channel_name(c) << "-channel residual is not zero through q^" << order << "\n";
          return 3;
        }
        return 0;
      }
      PowerSeries s(0);
      if (series_name == "g2") s = eisenstein_g2(order);
      else if (series_name == "delta") s = discriminant(order);
      else if (series_name == "logb1") s = recover_log_b1(order, t);
      else if (series_name == "b1") s = recover_b1(order, t);
      else if (series_name == "logb2") s = recover_log_b2(order, t);
      else if (series_name == "b2") s = recover_b2(order, t);
      else throw std::invalid_argument("series: unknown name '" + series_name + "'");
      emit(fmt, Json{{"series", series_name}, {"order", std::to_string(order)}, {"coefficients", to_json(s)}},
           series_text(s), series_csv(s));
    } else if (ratios->parsed()) {
      const char* cols[] = {"D", "E", "F", "G"};
      Json arr = Json::array();
      std::string text = "n D E F G";
      std::vector<std::vector<std::string>> rows{{"n", "D", "E", "F", "G"}};
      for (const auto& row : ratio_table()) {
        Json j{{"n", std::to_string(row.n)}};
        std::vector<std::string> cells{std::to_string(row.n)};
        for (std::size_t c = 0; c < 4; ++c) {
          const auto& v = row.ratio[c];
          j[cols[c]] = v ? Json{{"exact", v->to_string()}, {"rounded", render_two_decimals(*v)}} : Json(nullptr);
          cells.push_back(v ? render_two_decimals(*v) : kUndefinedCell);
        }
        arr.push_back(j);
        text += "\n" + cells[0] + " " + cells[1] + " " + cells[2] + " " + cells[3] + " " + cells[4];
        rows.push_back(cells);
      }
      emit(fmt, arr, text, rows);
    } else if (check->parsed()) {
      const auto results = run_reproduction_checks();
      bool all = true;
      Json arr = Json::array();
      std::string text;
      std::vector<std::vector<std::string>> rows{{"check", "status", "detail"}};
      for (const auto& r : results) {
        all = all && r.passed;
        arr.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : "  [" + r.detail + "]") + "\n";
        rows.push_back({r.name, r.passed ? "PASS" : "FAIL", r.detail});
      }
      text.pop_back();
      emit(fmt, arr, text, rows);
      return all ? 0 : 3;
    }
  } catch (const consistency_error& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
