#include "nodal/serialize.hpp"

namespace nodal {

Json to_json(const BigInt& v) { return v.to_string(); }

Json to_json(const Rational& v) { return v.to_string(); }

Json to_json(const UniPolyD& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

Json to_json(const LinearForm& f) {
  return Json{{"d", f.d.to_string()}, {"k", f.k.to_string()}, {"s", f.s.to_string()}, {"x", f.x.to_string()}};
}

Json to_json(const ChernNumbers& c) {
  return Json{{"d", c.d.to_string()}, {"k", c.k.to_string()}, {"s", c.s.to_string()}, {"x", c.x.to_string()}};
}

Json to_json(const PowerSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(c.to_string());
  return out;
}

Json to_json(const SparsePoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json ex = Json::array();
    for (int v : e) ex.push_back(std::to_string(v));
    out.push_back(Json{{"exponents", ex}, {"coefficient", c.to_string()}});
  }
  return out;
}

Json to_json(const GradedClass& c) {
  Json out = Json::object();
  for (const auto& [m, v] : c.terms()) out[m.to_string()] = v.to_string();
  return out;
}

Json to_json(const SetPartition& pi) {
  Json out = Json::array();
  for (const auto& block : pi.blocks()) {
    Json b = Json::array();
    for (int v : block) b.push_back(std::to_string(v));
    out.push_back(b);
  }
  return out;
}

}  // namespace nodal
