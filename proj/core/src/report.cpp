#include "pltower/report.hpp"

#include <json.hpp>

namespace pltower {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* schema_name = "pltower.tower-report";

Json certificate_json(const Certificate& c) {
  return Json{{"direction", to_string(c.direction)},
              {"interval", c.interval.str()},
              {"image", c.image.str()},
              {"inequality", c.inequality}};
}

Json step_json(const TowerStep& s) {
  return Json{{"level", s.level},
              {"cell", s.cell},
              {"interval", s.interval.str()},
              {"displacement", s.displacement.str()},
              {"certificate", certificate_json(s.certificate)},
              {"left_cells_identity", s.left_cells_identity},
              {"next_generators", s.next_generators}};
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorKind::Semantic, std::string("report is missing field '") + key + "'");
  }
  return obj.at(key);
}

template <class T>
T get(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Semantic, std::string("report field '") + key + "' has the wrong type");
  }
}

Certificate certificate_from(const Json& j) {
  Certificate c;
  c.direction = parse_direction(get<std::string>(j, "direction"));
  c.interval = IntervalSet::parse(get<std::string>(j, "interval"));
  c.image = IntervalSet::parse(get<std::string>(j, "image"));
  c.inequality = get<std::string>(j, "inequality");
  return c;
}

TowerStep step_from(const Json& j) {
  TowerStep s;
  s.level = get<std::size_t>(j, "level");
  s.cell = get<std::size_t>(j, "cell");
  s.interval = IntervalSet::parse(get<std::string>(j, "interval"));
  s.displacement = Word::parse(get<std::string>(j, "displacement"));
  s.certificate = certificate_from(field(j, "certificate"));
  s.left_cells_identity = get<bool>(j, "left_cells_identity");
  s.next_generators = get<std::vector<std::string>>(j, "next_generators");
  return s;
}

CellKind parse_cell_kind(const std::string& text) {
  if (text == "fixed") return CellKind::Fixed;
  if (text == "support") return CellKind::Support;
  throw Error(ErrorKind::Semantic, "unknown cell kind '" + text + "'");
}

}  // namespace

std::string to_json(const TowerReport& r) {
  Json gens = Json::array();
  for (const auto& [name, element] : r.generators) gens.push_back({{"name", name}, {"element", element}});

  Json points = Json::array();
  for (const Number& x : r.partition.points) points.push_back(x.str());
  Json cells = Json::array();
  for (CellKind k : r.partition.cells) cells.push_back(to_string(k));

  Json witnesses = Json::array();
  for (const GermWitness& w : r.germ_witnesses) {
    witnesses.push_back({{"element", w.element},
                         {"point", w.point.str()},
                         {"radius", w.radius ? Json(w.radius->str()) : Json(nullptr)}});
  }

  Json steps = Json::array();
  for (const TowerStep& s : r.steps) steps.push_back(step_json(s));

  Json doc = {{"schema", schema_name},
              {"version", report_schema_version},
              {"ambient", to_string(r.ambient)},
              {"generators", gens},
              {"germ_depth", r.germ_depth},
              {"partition", {{"points", points}, {"cells", cells}}},
              {"initial_generators", r.initial_generators},
              {"germ_check", {{"trivial", r.germs_trivial}, {"witnesses", witnesses}}},
              {"steps", steps},
              {"terminal", {{"level", r.terminal_level}, {"commutators_identity", r.terminal_identity}}},
              {"outcome", to_string(r.outcome)},
              {"generator_cap", r.generator_cap},
              {"capped", r.capped}};
  return doc.dump(2) + "\n";
}

TowerReport report_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("report is not valid JSON: ") + e.what());
  }
  if (get<std::string>(doc, "schema") != schema_name) throw Error(ErrorKind::Semantic, "not a tower report");
  if (get<int>(doc, "version") != report_schema_version) {
    throw Error(ErrorKind::Semantic, "unsupported report version " + std::to_string(get<int>(doc, "version")));
  }

  TowerReport r;
  r.ambient = parse_ambient(get<std::string>(doc, "ambient"));
  for (const Json& g : field(doc, "generators")) {
    r.generators.emplace_back(get<std::string>(g, "name"), get<std::string>(g, "element"));
  }
  r.germ_depth = get<int>(doc, "germ_depth");

  const Json& part = field(doc, "partition");
  for (const std::string& x : get<std::vector<std::string>>(part, "points")) r.partition.points.push_back(Number::parse(x));
  for (const std::string& c : get<std::vector<std::string>>(part, "cells")) r.partition.cells.push_back(parse_cell_kind(c));

  r.initial_generators = get<std::vector<std::string>>(doc, "initial_generators");

  const Json& germs = field(doc, "germ_check");
  r.germs_trivial = get<bool>(germs, "trivial");
  for (const Json& w : field(germs, "witnesses")) {
    GermWitness gw{get<std::string>(w, "element"), Number::parse(get<std::string>(w, "point")), std::nullopt};
    const Json& radius = field(w, "radius");
    if (!radius.is_null()) gw.radius = Number::parse(get<std::string>(w, "radius"));
    r.germ_witnesses.push_back(std::move(gw));
  }

  for (const Json& s : field(doc, "steps")) r.steps.push_back(step_from(s));

  const Json& terminal = field(doc, "terminal");
  r.terminal_level = get<std::size_t>(terminal, "level");
  r.terminal_identity = get<bool>(terminal, "commutators_identity");
  r.outcome = parse_outcome(get<std::string>(doc, "outcome"));
  r.generator_cap = get<std::size_t>(doc, "generator_cap");
  r.capped = get<bool>(doc, "capped");
  return r;
}

}  // namespace pltower
