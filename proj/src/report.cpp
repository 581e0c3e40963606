#include "prym/report.hpp"

#include <map>
#include <set>
#include <sstream>

namespace prym {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Surd& x) {
  return Json{{"a", x.a().get_str()}, {"b", x.b().get_str()}, {"den", x.den().get_str()}, {"D", x.disc().value()}};
}

Json to_json(const Prototype& p) {
  return Json{{"w", p.w}, {"h", p.h}, {"t", p.t}, {"e", p.e}, {"D", p.D}, {"model", to_string(classify_model(p))},
              {"class", invariant_class(p).label()}};
}

Json to_json(const Direction& d) {
  if (d.is_vertical()) return Json{{"vertical", true}};
  return Json{{"vertical", false}, {"slope", to_json(d.slope_value())}};
}

Json to_json(const MoveRecord& m) {
  Json j;
  j["kind"] = to_string(m.kind);
  j["label"] = m.label;
  j["source"] = m.source ? to_json(*m.source) : Json(nullptr);
  if (!m.surface.empty()) j["surface"] = m.surface;
  j["target"] = m.target ? to_json(*m.target) : Json(nullptr);
  j["target_e"] = m.target_e;
  j["target_model"] = to_string(m.target_model);
  j["witness"] = m.witness ? to_json(*m.witness) : Json(nullptr);
  j["area"] = m.area ? to_json(*m.area) : Json(nullptr);
  return j;
}

Json to_json(const Bridge& b) {
  Json moves = Json::array();
  for (const auto& m : b.moves) moves.push_back(to_json(m));
  return Json{{"route", b.route}, {"moves", moves}};
}

Json to_json(const TheoremReport& r) {
  return Json{{"D", r.D},           {"theorem", r.theorem}, {"applicable", r.applicable}, {"claimed", r.claimed},
              {"match", r.match},   {"expected", r.expected}, {"actual", r.actual},       {"details", r.details}};
}

Json to_json(const ComponentPartition& part) {
  Json comps = Json::array();
  for (const auto& c : part.components()) {
    Json members = Json::array();
    for (const auto& p : c) members.push_back(Json::array({p.w, p.h, p.t, p.e}));
    comps.push_back(members);
  }
  return Json{{"D", part.D}, {"level", to_string(part.level)}, {"count", part.count()}, {"components", comps}};
}

Json to_json(const StrategyScan& scan) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < scan.strategies.size(); ++i)
    rows.push_back(Json{{"strategy", to_string(scan.strategies[i])},
                        {"first_match", scan.first_match[i]},
                        {"any_match", scan.any_match[i]}});
  auto pairs = [](const std::vector<std::pair<int, int>>& v) {
    Json a = Json::array();
    for (auto [d, e] : v) a.push_back(Json::array({d, e}));
    return a;
  };
  return Json{{"h", scan.h},
              {"modulus", kModulus},
              {"strategies", rows},
              {"uncovered", pairs(scan.uncovered)},
              {"search_uncovered", pairs(scan.search_uncovered)}};
}

Json to_json(const CylinderDecomposition& dec) {
  Json cyls = Json::array();
  for (const auto& c : dec.cylinders)
    cyls.push_back(Json{{"circumference", to_json(c.circumference)},
                        {"height", to_json(c.height)},
                        {"twist", to_json(c.twist)},
                        {"area", to_json(c.area)},
                        {"simple", c.simple()}});
  return Json{{"direction", to_json(dec.direction)},
              {"kind", to_string(dec.kind)},
              {"crossings", dec.crossings},
              {"cylinders", cyls}};
}

bool orbit_matches(const OrbitReport& r) {
  bool empty = !is_discriminant(r.D) || enumerate(r.D, Filter::All).empty();
  return r.orbits == (empty ? 0 : 1);
}

Json orbit_json(const OrbitReport& r) {
  Json bridges = Json::array();
  for (const auto& b : r.bridges) bridges.push_back(to_json(b));
  return Json{{"D", r.D},
              {"pa_components", r.pa_components},
              {"bridges", bridges},
              {"orbits", r.orbits},
              {"matches_theorem", orbit_matches(r)}};
}

std::string partition_dot(const ComponentPartition& part) {
  std::ostringstream os;
  os << "graph " << quote(to_string(part.level) + "_" + std::to_string(part.D)) << " {\n";
  for (std::size_t i = 0; i < part.universe.size(); ++i)
    os << "  " << quote(part.universe[i].str()) << " [component=" << part.label[i] << "];\n";
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& m : part.generators) {
    std::string a = m.source->str(), b = m.target->str();
    if (a == b || !seen.emplace(std::min(a, b), std::max(a, b), m.label).second) continue;
    os << "  " << quote(a) << " -- " << quote(b) << " [label=" << quote(m.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string orbit_dot(const OrbitReport& r) {
  auto part = component_partition(r.D, Level::PA);
  std::ostringstream os;
  os << "graph " << quote("orbits_" + std::to_string(r.D)) << " {\n";
  std::map<int, std::string> names;
  for (const auto& c : part.components()) {
    std::string name = "A:" + c.front().str();
    names[part.label_of(c.front())] = name;
    os << "  " << quote(name) << " [size=" << c.size() << "];\n";
  }
  auto node = [&](const std::optional<Prototype>& p, const std::string& surface, ModelClass m) {
    if (!p) return "S:" + surface;
    if (m == ModelClass::A) return names.at(part.label_of(*p));
    return "B:" + p->str();
  };
  for (const auto& b : r.bridges)
    for (const auto& m : b.moves) {
      std::string from = node(m.source, m.surface, m.source ? classify_model(*m.source) : ModelClass::A);
      std::string to = node(m.target, "", m.target_model);
      os << "  " << quote(from) << " -- " << quote(to) << " [label=" << quote(m.label) << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace prym
