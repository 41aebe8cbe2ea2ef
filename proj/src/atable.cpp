#include "nodal/atable.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#ifndef NODAL_ATLAS_DATA_DIR
#define NODAL_ATLAS_DATA_DIR "data"
#endif

namespace nodal {

namespace {

BigInt sign_factorial(int i) {
  BigInt f = factorial(i - 1);
  return (i - 1) % 2 ? -f : f;
}

std::array<BigInt, 4> read_row(const nlohmann::json& j) {
  std::array<BigInt, 4> out;
  const char* keys[] = {"d", "k", "s", "x"};
  for (std::size_t c = 0; c < 4; ++c) out[c] = BigInt::from_string(j.at(keys[c]).get<std::string>());
  return out;
}

}  // namespace

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("NODAL_ATLAS_DATA"); env && *env) return env;
  return NODAL_ATLAS_DATA_DIR;
}

LinearForm NodeLinearForm::a() const { return Rational(factorial(index - 1)) * a_tilde(); }

LinearForm NodeLinearForm::a_tilde() const {
  const Rational sign = index % 2 ? Rational(1) : Rational(-1);
  return sign * LinearForm{D, E, F, G};
}

BigInt NodeLinearForm::evaluate(const ChernNumbers& c) const {
  return sign_factorial(index) * (D * c.d + E * c.k + F * c.s + G * c.x);
}

ATable ATable::from_json_text(const std::string& text) {
  ATable t;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("a_forms: malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("a_forms: expected a JSON array");
  try {
    for (const auto& rec : doc) {
      ATableRow row;
      row.index = rec.at("i").get<int>();
      row.a = read_row(rec.at("a"));
      row.a_tilde = read_row(rec.at("a_tilde"));
      if (row.index != static_cast<int>(t.rows_.size()) + 1) {
        throw std::invalid_argument("a_forms: rows must be consecutive from i = 1");
      }
      const BigInt scale = sign_factorial(row.index);
      t.forms_.push_back(NodeLinearForm{row.index, row.a[0].divexact(scale), row.a[1].divexact(scale),
                                        row.a[2].divexact(scale), row.a[3].divexact(scale)});
      t.rows_.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("a_forms: bad record: ") + e.what());
  }
  return t;
}

ATable ATable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open data asset " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

const ATable& ATable::standard() {
  static const ATable table = load(data_directory() / "a_forms.json");
  return table;
}

const NodeLinearForm& ATable::form(int i) const {
  if (i < 1) throw std::out_of_range("a_form: index must be at least 1");
  if (i > size()) {
    throw std::out_of_range("a_form: table exhausted at i = " + std::to_string(i) + " (have " +
                            std::to_string(size()) + ")");
  }
  return forms_[static_cast<std::size_t>(i - 1)];
}

std::vector<TildeMismatch> ATable::tilde_mismatches() const {
  std::vector<TildeMismatch> out;
  for (const auto& row : rows_) {
    const BigInt f = factorial(row.index - 1);
    for (std::size_t c = 0; c < 4; ++c) {
      const BigInt expected = row.a[c].divexact(f);
      if (expected != row.a_tilde[c]) out.push_back({row.index, static_cast<int>(c), row.a_tilde[c], expected});
    }
  }
  return out;
}

}  // namespace nodal
