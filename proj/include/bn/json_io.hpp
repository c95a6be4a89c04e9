#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bn/chain.hpp"
#include "bn/elliptic.hpp"
#include "bn/oracle.hpp"
#include "bn/realizers.hpp"
#include "bn/sequences.hpp"
#include "bn/strata.hpp"

namespace bn::io {

using nlohmann::json;

inline json to_json(const RamSeq& s) { return s.entries(); }
inline json to_json(const VanishingSeq& s) { return s.entries(); }

inline std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput(what + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline int get_int(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw InvalidInput("missing integer field '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw InvalidInput("field '" + key + "' must be an integer");
  return v.get<int>();
}

inline RamSeq ramseq_from(const json& j, int r, int d, const std::string& what) {
  return RamSeq(r, d, int_list(j, what));
}

inline json to_json(const BNProblem& p) {
  return {{"g", p.g}, {"r", p.r()}, {"d", p.d()}, {"alpha1", to_json(p.alpha1)}, {"alpha2", to_json(p.alpha2)}};
}

inline json to_json(const Stratum& s) {
  return {{"alphaY", to_json(s.alphaY())},
          {"alphaZ", to_json(s.alphaZ())},
          {"refined", s.refined()},
          {"fiber_dim_bound", fiber_dim_bound(s)}};
}

inline json to_json(const ChainComponent& c) {
  return {{"genus", c.genus},
          {"left_ram", to_json(c.left_ram)},
          {"right_ram", to_json(c.right_ram)},
          {"component_rho", c.component_rho}};
}

inline json to_json(const ChainWitness& w) {
  json comps = json::array();
  for (const auto& c : w.components) comps.push_back(to_json(c));
  return {{"r", w.r}, {"d", w.d}, {"components", comps}, {"total_rho", w.total_rho}};
}

inline ChainWitness witness_from(const json& j) {
  if (!j.is_object()) throw InvalidInput("witness must be a JSON object");
  ChainWitness w;
  w.r = get_int(j, "r");
  w.d = get_int(j, "d");
  w.total_rho = get_int(j, "total_rho");
  if (!j.contains("components") || !j.at("components").is_array())
    throw InvalidInput("witness needs a 'components' array");
  for (const auto& c : j.at("components")) {
    if (!c.is_object()) throw InvalidInput("witness components must be objects");
    w.components.push_back({get_int(c, "genus"), ramseq_from(c.at("left_ram"), w.r, w.d, "left_ram"),
                            ramseq_from(c.at("right_ram"), w.r, w.d, "right_ram"), get_int(c, "component_rho")});
  }
  return w;
}

inline json to_json(const Polynomial& f) {
  json out = json::array();
  for (const auto& c : f) {
    if (c.denominator() != 1) throw std::logic_error("non-integral coefficient in a serialized basis");
    out.push_back(c.numerator());
  }
  return out;
}

inline json to_json(const G0Series& s) {
  json basis = json::array();
  for (const auto& f : s.basis) basis.push_back(to_json(f));
  return {{"d", s.d}, {"basis", basis}};
}

inline json to_json(const LineBundleDescriptor& L) {
  json out{{"kind", L.is_special() ? "special" : "generic"}, {"d", L.d}};
  if (L.is_special()) out["a"] = L.a;
  return out;
}

inline json to_json(const EcPoint& P) {
  if (P.infinity) return "O";
  return json::array({P.x, P.y});
}

inline EcPoint point_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return EcPoint::at_infinity();
  const auto xy = int_list(j, "point");
  if (xy.size() != 2) throw InvalidInput("point must be [x, y] or \"O\"");
  return EcPoint::affine(xy[0], xy[1]);
}

inline json to_json(const EllipticModel& m) {
  return {{"name", m.name},
          {"p", m.curve.p()},
          {"A", m.curve.A()},
          {"B", m.curve.B()},
          {"P1", to_json(m.P1)},
          {"P2", to_json(m.P2)},
          {"order_diff", m.order_diff}};
}

/// Rebuilds a model and checks the recorded order against the group law.
inline EllipticModel model_from(const json& j) {
  EllipticModel m(j.value("name", std::string("model")),
                  EllipticCurve(j.at("p").get<std::int64_t>(), j.at("A").get<std::int64_t>(),
                                j.at("B").get<std::int64_t>()),
                  point_from(j.at("P1")), point_from(j.at("P2")));
  if (j.contains("order_diff") && j.at("order_diff").get<std::int64_t>() != m.order_diff)
    throw InvalidInput("fixture " + m.name + " records ord(P1-P2)=" + j.at("order_diff").dump() +
                       " but the group law gives " + std::to_string(m.order_diff));
  return m;
}

struct EllipticFixtures {
  int version = 1;
  EllipticModel general;
  EllipticModel torsion;
};

inline EllipticFixtures load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput("fixture file " + path + " is not valid JSON: " + e.what());
  }
  return {j.value("version", 1), model_from(j.at("general")), model_from(j.at("torsion"))};
}

inline json to_json(const EllipticFixtures& f) {
  return {{"version", f.version}, {"general", to_json(f.general)}, {"torsion", to_json(f.torsion)}};
}

inline json to_json(const OracleCounts& c) {
  json counts = json::array();
  for (const auto& pt : c.counts) counts.push_back({{"q", pt.q}, {"count", pt.count}});
  json out{{"counts", counts}, {"nonempty", c.any_nonzero}};
  if (c.fitted_dim) out["fitted_dim"] = *c.fitted_dim;
  else if (!c.any_nonzero) out["fitted_dim"] = nullptr;
  else out["fit_error"] = c.fit_note;
  return out;
}

}  // namespace bn::io
