#include "nodal/kazarian.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "nodal/atable.hpp"
#include "nodal/partitions.hpp"

namespace nodal {

int label_codim(SingularityLabel l) {
  switch (l) {
    case SingularityLabel::A1: return 1;
    case SingularityLabel::A2: return 2;
    case SingularityLabel::A3: return 3;
    case SingularityLabel::A4: return 4;
    case SingularityLabel::D4: return 4;
  }
  return 0;
}

std::string label_name(SingularityLabel l) {
  static const char* names[] = {"A1", "A2", "A3", "A4", "D4"};
  return names[static_cast<int>(l)];
}

MultisingularityType::MultisingularityType(std::vector<SingularityLabel> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
}

MultisingularityType MultisingularityType::parse(std::string_view text) {
  std::vector<SingularityLabel> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    int mult = 1;
    std::string head = factor;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      head = factor.substr(0, caret);
      const std::string e = factor.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), ::isdigit) || e.size() > 2) {
        throw std::invalid_argument("bad multiplicity in '" + factor + "'");
      }
      mult = std::stoi(e);
      if (mult < 1) throw std::invalid_argument("multiplicity must be positive in '" + factor + "'");
    }
    SingularityLabel l;
    if (head == "A1") l = SingularityLabel::A1;
    else if (head == "A2") l = SingularityLabel::A2;
    else if (head == "A3") l = SingularityLabel::A3;
    else if (head == "A4") l = SingularityLabel::A4;
    else if (head == "D4") l = SingularityLabel::D4;
    else throw std::invalid_argument("unknown singularity label '" + head + "'");
    out.insert(out.end(), static_cast<std::size_t>(mult), l);
  }
  if (out.empty()) throw std::invalid_argument("empty multisingularity type");
  return MultisingularityType(std::move(out));
}

int MultisingularityType::codim() const {
  int c = 0;
  for (auto l : labels_) c += label_codim(l);
  return c;
}

BigInt MultisingularityType::aut_order() const {
  BigInt out = 1;
  for (std::size_t i = 0; i < labels_.size();) {
    std::size_t j = i;
    while (j < labels_.size() && labels_[j] == labels_[i]) ++j;
    out *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return out;
}

std::string MultisingularityType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size();) {
    std::size_t j = i;
    while (j < labels_.size() && labels_[j] == labels_[i]) ++j;
    if (!out.empty()) out += '*';
    out += label_name(labels_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

MultisingularityType MultisingularityType::sub(const std::vector<int>& positions) const {
  std::vector<SingularityLabel> out;
  for (int p : positions) out.push_back(labels_.at(static_cast<std::size_t>(p)));
  return MultisingularityType(std::move(out));
}

KazarianTable KazarianTable::from_json_text(const std::string& text) {
  KazarianTable t;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("kazarian: expected a JSON array");
    for (const auto& rec : doc) {
      auto num = [&](const char* key) { return Rational::from_string(rec.at(key).get<std::string>()); };
      const auto alpha = MultisingularityType::parse(rec.at("labels").get<std::string>());
      if (!t.rows_.emplace(alpha, LinearForm{num("d"), num("k"), num("s"), num("x")}).second) {
        throw std::invalid_argument("kazarian: duplicate row " + alpha.to_string());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("kazarian: bad JSON: ") + e.what());
  }
  return t;
}

KazarianTable KazarianTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open data asset " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

const KazarianTable& KazarianTable::standard() {
  static const KazarianTable table = load(data_directory() / "kazarian.json");
  return table;
}

const LinearForm& KazarianTable::s_alpha(const MultisingularityType& alpha) const {
  auto it = rows_.find(alpha);
  if (it == rows_.end()) throw std::out_of_range("no tabulated S_alpha for " + alpha.to_string());
  return it->second;
}

Rational count_multisingular(const MultisingularityType& alpha, const ChernNumbers& chern,
                             const KazarianTable& table) {
  if (alpha.size() == 0) return Rational(1);
  Rational total;
  for_each_partition(alpha.size(), [&](const SetPartition& pi) {
    Rational term(1);
    for (const auto& block : pi.blocks()) {
      std::vector<int> pos;
      for (int b : block) pos.push_back(b - 1);
      term *= table.s_alpha(alpha.sub(pos)).evaluate(chern);
    }
    total += term;
  });
  return total / Rational(alpha.aut_order());
}

std::vector<MultisingularityType> gamma_types(int i) {
  static const SingularityLabel all[] = {SingularityLabel::A1, SingularityLabel::A2, SingularityLabel::A3,
                                         SingularityLabel::A4, SingularityLabel::D4};
  std::vector<MultisingularityType> out;
  std::vector<SingularityLabel> cur;
  std::function<void(int, int)> walk = [&](int start, int left) {
    if (left == 0) {
      MultisingularityType t(cur);
      if (!std::all_of(cur.begin(), cur.end(), [](auto l) { return l == SingularityLabel::A1; })) out.push_back(t);
      return;
    }
    for (int k = start; k < 5; ++k) {
      if (label_codim(all[k]) > left) continue;
      cur.push_back(all[k]);
      walk(k, left - label_codim(all[k]));
      cur.pop_back();
    }
  };
  if (i >= 1) walk(0, i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nodal
