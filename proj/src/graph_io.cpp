#include <json.hpp>

#include "chainmail/graph.hpp"

namespace chainmail {

namespace {

using json = nlohmann::ordered_json;

long long integer_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key))
    throw Error(errc::parse, where + ": missing \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw Error(errc::parse, where + ": \"" + key + "\" must be an integer");
  return v.get<long long>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key))
    throw Error(errc::parse, where + ": missing \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_string())
    throw Error(errc::parse, where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

ChainmailGraph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(errc::parse, std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(errc::parse, "graph JSON: top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "vertices" && key != "edges" && key != "rotation")
      throw Error(errc::parse, "graph JSON: unknown key \"" + key + "\"");
  if (!j.contains("vertices") || !j.at("vertices").is_array())
    throw Error(errc::parse, "graph JSON: \"vertices\" must be an array");
  if (!j.contains("edges") || !j.at("edges").is_array())
    throw Error(errc::parse, "graph JSON: \"edges\" must be an array");

  GraphData d;
  size_t vi = 0;
  for (const auto& v : j.at("vertices")) {
    std::string where = "vertex #" + std::to_string(vi++);
    if (!v.is_object()) throw Error(errc::parse, where + ": must be an object");
    d.vertices.push_back({string_field(v, "id", where), integer_field(v, "weight", where)});
  }
  size_t ei = 0;
  for (const auto& e : j.at("edges")) {
    std::string where = "edge #" + std::to_string(ei++);
    if (!e.is_object()) throw Error(errc::parse, where + ": must be an object");
    long long sign = integer_field(e, "sign", where);
    if (sign < INT32_MIN || sign > INT32_MAX)
      throw Error(errc::parse, where + ": \"sign\" out of range");
    d.edges.push_back({string_field(e, "u", where), string_field(e, "v", where),
                       static_cast<int>(sign)});
  }
  if (j.contains("rotation")) {
    if (!j.at("rotation").is_object())
      throw Error(errc::parse, "graph JSON: \"rotation\" must be an object");
    std::map<std::string, std::vector<int>> rot;
    for (const auto& [id, order] : j.at("rotation").items()) {
      if (!order.is_array())
        throw Error(errc::parse, "rotation for \"" + id + "\" must be an array");
      std::vector<int> list;
      for (const auto& x : order) {
        if (!x.is_number_integer())
          throw Error(errc::parse, "rotation for \"" + id + "\" must hold edge indices");
        long long v = x.get<long long>();
        if (v < 0 || v >= static_cast<long long>(d.edges.size()))
          throw Error(errc::parse, "rotation for \"" + id + "\" has edge index out of range");
        list.push_back(static_cast<int>(v));
      }
      rot[id] = std::move(list);
    }
    d.rotation = std::move(rot);
  }
  return build_graph(d);
}

std::string serialize_graph(const ChainmailGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  j["edges"] = json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back(
        {{"u", g.vertex(e.u).id}, {"v", g.vertex(e.v).id}, {"sign", e.sign}});
  if (g.has_rotation()) {
    j["rotation"] = json::object();
    for (int i = 0; i < g.vertex_count(); ++i) j["rotation"][g.vertex(i).id] = g.rotation()[i];
  }
  return j.dump();
}

}  // namespace chainmail
