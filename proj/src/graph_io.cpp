#include "steklov/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace steklov {

using nlohmann::json;

RawGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    RawGraph raw;
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "graph document must be an object");
    raw.num_vertices = doc.at("num_vertices").get<int>();
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edges must be [u, v] pairs");
      raw.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    raw.boundary = doc.at("boundary").get<std::vector<int>>();
    if (auto it = doc.find("metadata"); it != doc.end() && it->is_object()) {
      const auto& m = *it;
      if (auto p = m.find("planar"); p != m.end() && !p->is_null()) raw.metadata.planar = p->get<bool>();
      if (auto x = m.find("crossing_number"); x != m.end() && !x->is_null())
        raw.metadata.crossing_number = x->get<int>();
      if (auto gg = m.find("genus"); gg != m.end() && !gg->is_null()) raw.metadata.genus = gg->get<int>();
    }
    return raw;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

RawGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

std::string graph_to_json(const BoundedGraph& g) {
  json doc;
  doc["num_vertices"] = g.num_vertices();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = edges;
  doc["boundary"] = g.boundary();
  json meta = json::object();
  const auto& m = g.metadata();
  if (m.planar) meta["planar"] = *m.planar;
  if (m.crossing_number) meta["crossing_number"] = *m.crossing_number;
  if (m.genus) meta["genus"] = *m.genus;
  doc["metadata"] = meta;
  return doc.dump();
}

}  // namespace steklov
