#include "perco/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "perco/error.hpp"

namespace perco {

namespace {

using json = nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Error::Kind::Input, "malformed graph spec: " + what);
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) malformed(std::string("missing field '") + name + "'");
  return obj.at(name);
}

int int_field(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_number_integer()) malformed(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

double real_field(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_number()) malformed(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

Rational probability(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number()) return parse_rational(v.dump());
  malformed("field 'p' must be a string or a number");
}

Role parse_role(const json& v) {
  if (!v.is_string()) malformed("cycle role must be a string");
  const auto s = v.get<std::string>();
  if (s == "u") return Role::U;
  if (s == "a") return Role::A;
  if (s == "w") return Role::W;
  if (s == "b") return Role::B;
  malformed("unknown cycle role '" + s + "'");
}

std::vector<int> id_list(const json& v, const char* name) {
  if (!v.is_array()) malformed(std::string("field '") + name + "' must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) malformed(std::string("field '") + name + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

GraphSpec parse_graph_spec(const json& doc) {
  GraphSpec spec;
  const auto& vertices = field(doc, "vertices");
  const auto& edges = field(doc, "edges");
  if (!vertices.is_array() || !edges.is_array()) malformed("'vertices' and 'edges' must be arrays");
  for (const auto& v : vertices) spec.vertices.push_back({int_field(v, "id"), real_field(v, "x"), real_field(v, "y")});
  for (const auto& e : edges) {
    EdgeSpec es;
    es.id = int_field(e, "id");
    es.tail = int_field(e, "tail");
    es.head = int_field(e, "head");
    const auto& o = field(e, "oriented");
    if (!o.is_boolean()) malformed("field 'oriented' must be a boolean");
    es.oriented = o.get<bool>();
    es.p = probability(field(e, "p"));
    spec.edges.push_back(std::move(es));
  }
  if (doc.contains("cycle")) {
    const auto& c = doc.at("cycle");
    CycleSpec cs;
    const auto& list = field(c, "vertices");
    if (!list.is_array()) malformed("cycle 'vertices' must be an array");
    for (const auto& rec : list) {
      cs.vertices.push_back(int_field(rec, "id"));
      cs.roles.push_back(parse_role(field(rec, "role")));
    }
    cs.U = id_list(field(c, "U"), "U");
    cs.W = id_list(field(c, "W"), "W");
    spec.cycle = std::move(cs);
  }
  return spec;
}

GraphSpec read_graph_spec(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  return parse_graph_spec(doc);
}

GraphSpec load_graph_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::Input, "cannot open graph spec '" + path + "'");
  return read_graph_spec(in);
}

json graph_spec_json(const GraphSpec& spec) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : spec.vertices) doc["vertices"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}});
  doc["edges"] = json::array();
  for (const auto& e : spec.edges)
    doc["edges"].push_back(
        {{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"oriented", e.oriented}, {"p", to_string(e.p)}});
  if (spec.cycle) {
    json c;
    c["vertices"] = json::array();
    for (std::size_t i = 0; i < spec.cycle->vertices.size(); ++i)
      c["vertices"].push_back(
          {{"id", spec.cycle->vertices[i]}, {"role", std::string(1, role_letter(spec.cycle->roles[i]))}});
    c["U"] = spec.cycle->U;
    c["W"] = spec.cycle->W;
    doc["cycle"] = std::move(c);
  }
  return doc;
}

void write_graph_spec(std::ostream& out, const GraphSpec& spec) { out << graph_spec_json(spec).dump(2) << '\n'; }

}  // namespace perco
