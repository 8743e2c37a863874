#include "casimir/serialization.hpp"

#include <limits>
#include <stdexcept>

namespace casimir {

Json weight_to_json(const Weight& w) {
  Json out = Json::array();
  for (auto c : w.coords()) out.push_back(c);
  return out;
}

Weight weight_from_json(const Json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) throw std::invalid_argument("weight must be an array of length " + std::to_string(rank));
  Weight w(rank);
  for (int i = 0; i < rank; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number_integer()) throw std::invalid_argument("weight coordinates must be integers");
    w[i] = j[static_cast<std::size_t>(i)].get<int>();
  }
  return w;
}

Json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

Json character_to_json(const Character& chi, const Weight& lambda) {
  Json entries = Json::array();
  for (const auto& [w, m] : chi.sorted()) entries.push_back(Json::array({weight_to_json(w), m}));
  Json out;
  out["type"] = chi.ambient().type().name();
  out["lambda"] = weight_to_json(lambda);
  out["entries"] = std::move(entries);
  return out;
}

Character character_from_json(const RootSystem& rs, const Json& j, Weight* lambda) {
  if (!j.is_object() || !j.contains("type") || !j.contains("lambda") || !j.contains("entries")) {
    throw std::invalid_argument("character document is missing fields");
  }
  if (CartanType::parse(j.at("type").get<std::string>()) != rs.type()) {
    throw std::invalid_argument("character document is for another type");
  }
  if (lambda) *lambda = weight_from_json(j.at("lambda"), rs.rank());
  WeightMap entries;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("malformed character entry");
    const auto m = e[1].get<Multiplicity>();
    if (!entries.emplace(weight_from_json(e[0], rs.rank()), m).second) throw std::invalid_argument("duplicate weight");
  }
  return Character(rs, std::move(entries));
}

std::string character_file_name(const CartanType& type, const Weight& lambda) {
  std::string name = type.name();
  for (auto c : lambda.coords()) name += "_" + std::to_string(c);
  return name + ".json";
}

Json ideal_to_json(const RootSystem& rs, const NilIdeal& ideal) {
  Json out = Json::array();
  for (const auto& c : ideal_root_coords(rs, ideal)) out.push_back(c);
  return out;
}

Json row_to_json(const SpectrumRow& row) {
  Json comps = Json::array();
  for (const auto& c : row.components) {
    Json e;
    e["weight"] = weight_to_json(c.weight);
    e["mult"] = c.mult;
    e["dim"] = bigint_to_json(c.dim);
    comps.push_back(std::move(e));
  }
  Json strategies = Json::array();
  for (auto s : row.strategies) strategies.push_back(std::string(strategy_name(s)));
  Json out;
  out["i"] = row.i;
  out["m"] = row.m.str();
  out["components"] = std::move(comps);
  out["dim"] = bigint_to_json(row.dim);
  out["strategies"] = std::move(strategies);
  return out;
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["clause"] = c.clause;
    e["status"] = std::string(status_name(c.status));
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(row_to_json(row));
  Json out;
  out["type"] = report.type.name();
  out["n"] = report.n;
  out["r"] = report.r;
  out["l"] = report.l;
  out["passed"] = report.passed();
  out["observed_p"] = report.observed_p;
  out["checks"] = std::move(checks);
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace casimir
